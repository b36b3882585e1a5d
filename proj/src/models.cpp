#include "latcoh/models.hpp"

#include <algorithm>
#include <map>

namespace latcoh {

namespace {

int find_sorted(const std::vector<IVec>& v, const IVec& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return -1;
    return static_cast<int>(it - v.begin());
}

// truncated shift: (U^s t)[j] = t[j+s], zero beyond the truncation
TowerElement shift(const TowerElement& t, int s) {
    TowerElement r = TowerElement::zero(static_cast<int>(t.bits.size()));
    for (size_t j = 0; j + s < t.bits.size(); ++j) r.bits[j] = t.bits[j + s];
    return r;
}

// shift amount between neighbors in the Char model: 2n = <K_x, v> + v.v
long long char_shift_n(const IntersectionForm& form, const CharVector& base, const IVec& x,
                       int v) {
    IVec mx = mat_vec(form.M, x);
    long long num = base.evals[v] + 2 * mx[v] + form.M[v][v];
    if (num % 2 != 0) throw std::logic_error("char_shift_n: parity failure");
    return num / 2;
}

// relation U^n phi(x+v) = phi(x) (n >= 0) / phi(x+v) = U^{-n} phi(x) (n <= 0)
bool check_relation(const TowerElement& at_x, const TowerElement& at_xv, long long n) {
    if (n >= 0) return shift(at_xv, static_cast<int>(n)) == at_x;
    return at_xv == shift(at_x, static_cast<int>(-n));
}

// Same relation as ParityUnionFind equations; vars are (point index, bit).
void add_relation(ParityUnionFind& uf, int depth, int x_base, int xv_base, long long n) {
    if (n >= 0) {
        for (int j = 0; j < depth; ++j) {
            if (j + n < depth)
                uf.equate(xv_base + j + static_cast<int>(n), x_base + j, false);
            else
                uf.pin(x_base + j, false);
        }
    } else {
        for (int j = 0; j < depth; ++j) {
            if (j - n < depth)
                uf.equate(x_base + j - static_cast<int>(n), xv_base + j, false);
            else
                uf.pin(xv_base + j, false);
        }
    }
}

}  // namespace

int CharModelFunction::find_offset(const IVec& x) const { return find_sorted(offsets, x); }
int LModelFunction::find_point(const IVec& x) const { return find_sorted(points, x); }

bool validate_char_model(const IntersectionForm& form, const CharModelFunction& f) {
    for (size_t i = 0; i < f.offsets.size(); ++i) {
        for (int v = 0; v < form.n; ++v) {
            IVec y = f.offsets[i];
            ++y[v];
            int j = f.find_offset(y);
            if (j < 0) continue;
            long long n = char_shift_n(form, f.base, f.offsets[i], v);
            if (!check_relation(f.values[i], f.values[j], n)) return false;
        }
    }
    return true;
}

bool validate_l_model(const IntersectionForm& form, const LModelFunction& f) {
    for (size_t i = 0; i < f.points.size(); ++i) {
        for (int v = 0; v < form.n; ++v) {
            IVec y = f.points[i];
            ++y[v];
            int j = f.find_point(y);
            if (j < 0) continue;
            long long n = chi(form, f.base, f.points[i]) - chi(form, f.base, y);
            if (!check_relation(f.values[i], f.values[j], n)) return false;
        }
    }
    return true;
}

CharModelFunction phi0_char_model(const IntersectionForm& form, const BlowdownTrace& trace,
                                  const std::vector<IVec>& box, int depth) {
    SSet s = s_set(form, trace);
    CharModelFunction f;
    f.base = canonical_class(form);
    f.offsets = box;
    std::sort(f.offsets.begin(), f.offsets.end());
    f.depth = depth;
    f.values.assign(f.offsets.size(), TowerElement::zero(depth));
    for (const IVec& pt : s.sums) {
        int i = f.find_offset(pt);
        if (i < 0) throw WindowMisalignment("phi0 support point outside the window box");
        f.values[i] = TowerElement::generator(depth);
    }
    return f;
}

LModelFunction iota_pullback(const IntersectionForm& form, const CharModelFunction& phi,
                             const std::vector<IVec>& box) {
    LModelFunction f;
    f.base = phi.base;
    f.points = box;
    std::sort(f.points.begin(), f.points.end());
    f.depth = phi.depth;
    f.values.reserve(f.points.size());
    for (const IVec& x : f.points) {
        int i = phi.find_offset(x);
        if (i < 0) throw WindowMisalignment("iota_pullback: box point not in the Char window");
        f.values.push_back(phi.values[i]);
    }
    if (!validate_l_model(form, f))
        throw std::logic_error("iota_pullback: result violates L-model compatibility");
    return f;
}

RootFunction theta_pushforward_check(const IntersectionForm& form, const LModelFunction& phi,
                                     const TowerModel& model) {
    const GradedRoot& root = model.root();
    RootFunction psi = model.zero();
    std::vector<char> assigned(psi.values.size(), 0);
    std::vector<IVec> first_point(psi.values.size());
    for (size_t i = 0; i < phi.points.size(); ++i) {
        const IVec& x = phi.points[i];
        long long level = chi(form, phi.base, x);
        if (level < root.min_level || level > root.top_level)
            throw WindowMisalignment("theta: point level outside the modeled root window");
        int vid = -1;
        for (int cand : root.vertices_at_level(level)) {
            const auto& pts = root.vertex(cand).points;
            if (std::binary_search(pts.begin(), pts.end(), x)) {
                vid = cand;
                break;
            }
        }
        if (vid < 0) throw WindowMisalignment("theta: point not found in any root component");
        int w = model.window_index_of_root_vertex(vid);
        if (assigned[w]) {
            if (!(psi.values[w] == phi.values[i]))
                throw NotConstantOnComponent("phi is not constant on a root component",
                                             first_point[w], x);
        } else {
            psi.values[w] = phi.values[i];
            assigned[w] = 1;
            first_point[w] = x;
        }
    }
    return psi;
}

std::vector<IVec> lattice_box(int n, int radius) {
    std::vector<IVec> out;
    IVec x(n, -radius);
    while (true) {
        out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == radius) x[i] = -radius, --i;
        if (i < 0) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

ModelEquivalenceReport check_model_equivalence(const IntersectionForm& form, const CharVector& k,
                                               int box_radius, int depth, long long budget) {
    ModelEquivalenceReport rep;
    rep.box_radius = box_radius;
    rep.depth = depth;
    Rat volume = 1;
    for (int i = 0; i < form.n; ++i) volume *= Rat(2 * box_radius + 1);
    if (volume > budget) throw BudgetExceeded("model equivalence box budget exceeded");
    std::vector<IVec> box = lattice_box(form.n, box_radius);
    int npts = static_cast<int>(box.size());

    // Char-model and L-model dimensions: same variables, shift amounts computed
    // by the two independent formulas
    ParityUnionFind uf_char(npts * depth), uf_l(npts * depth);
    bool bridges_agree = true;
    for (int i = 0; i < npts; ++i) {
        for (int v = 0; v < form.n; ++v) {
            IVec y = box[i];
            ++y[v];
            int j = find_sorted(box, y);
            if (j < 0) continue;
            long long n_char = char_shift_n(form, k, box[i], v);
            long long n_l = chi(form, k, box[i]) - chi(form, k, y);
            if (n_char != n_l) bridges_agree = false;
            add_relation(uf_char, depth, i * depth, j * depth, n_char);
            add_relation(uf_l, depth, i * depth, j * depth, n_l);
        }
    }
    rep.dim_char = uf_char.solution_dimension();
    rep.dim_l = uf_l.solution_dimension();

    // Root-model dimension on the corresponding window: the components of each
    // box point at every level from chi(x) up to the box's max level, with the
    // inclusion edges between consecutive levels
    GradedRoot root = graded_root(form, k, RootOptions{budget, 3});
    long long max_level = root.min_level;
    std::vector<long long> levels(npts);
    for (int i = 0; i < npts; ++i) {
        levels[i] = chi(form, k, box[i]);
        max_level = std::max(max_level, levels[i]);
    }
    // window vertex key: (level, vertex id) with id = -1 for the single chain
    // above the root's modeled top
    std::map<std::pair<long long, int>, int> window;
    auto theta_at = [&](const IVec& x, long long n) -> std::pair<long long, int> {
        if (n > root.top_level) return {n, -1};
        for (int cand : root.vertices_at_level(n)) {
            const auto& pts = root.vertex(cand).points;
            if (std::binary_search(pts.begin(), pts.end(), x)) return {n, cand};
        }
        throw std::logic_error("model equivalence: point missing from root component");
    };
    std::vector<std::pair<int, int>> edges;  // window index pairs (lower, upper)
    for (int i = 0; i < npts; ++i) {
        int prev = -1;
        for (long long n = levels[i]; n <= max_level; ++n) {
            auto key = theta_at(box[i], n);
            auto [it, inserted] = window.emplace(key, static_cast<int>(window.size()));
            int cur = it->second;
            if (prev >= 0) edges.emplace_back(prev, cur);
            prev = cur;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    ParityUnionFind uf_root(static_cast<int>(window.size()) * depth);
    for (auto [lo, hi] : edges) add_relation(uf_root, depth, hi * depth, lo * depth, 1);
    rep.dim_root = uf_root.solution_dimension();

    rep.dims_agree = (rep.dim_char == rep.dim_l) && (rep.dim_l == rep.dim_root);
    // iota is the identity on the shared variable space; it is bijective on the
    // window iff the two constraint systems coincide, i.e. the bridge identity
    // holds for every in-window pair
    rep.iota_bijective = bridges_agree && (rep.dim_char == rep.dim_l);
    // theta* is injective (every window vertex contains a box point), so it is
    // bijective iff the dimensions match
    rep.theta_bijective = (rep.dim_root == rep.dim_l);
    return rep;
}

}  // namespace latcoh
