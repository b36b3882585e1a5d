#include "latcoh/sublevel.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace latcoh {

namespace {

struct EllipsoidData {
    int n;
    std::vector<Rat> c;       // center: Q c = k/2, Q = -M
    RMat l;                   // unit lower-triangular, Q = L D L^T
    std::vector<Rat> d;       // positive pivots
    Rat r;                    // radius^2: (x-c)^T Q (x-c) <= r  <=>  chi <= level
};

EllipsoidData ellipsoid_data(const IntersectionForm& form, const CharVector& k, long long n) {
    EllipsoidData e;
    e.n = form.n;
    std::vector<Rat> rhs(form.n);
    for (int i = 0; i < form.n; ++i) rhs[i] = Rat(-k.evals[i], 2);  // Qc = k/2, Q = -M
    e.c = form.solve(rhs);  // M c = -k/2  <=>  (-M) c = k/2
    RMat q(form.n, std::vector<Rat>(form.n));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) q[i][j] = -form.M[i][j];
    e.l.assign(form.n, std::vector<Rat>(form.n, 0));
    e.d.resize(form.n);
    RMat a = q;
    for (int kk = 0; kk < form.n; ++kk) {
        e.d[kk] = a[kk][kk];
        e.l[kk][kk] = 1;
        for (int i = kk + 1; i < form.n; ++i) {
            Rat f = a[i][kk] / a[kk][kk];
            e.l[i][kk] = f;
            for (int j = kk; j < form.n; ++j) a[i][j] -= f * a[kk][j];
        }
    }
    // r = 2n + c^T Q c
    Rat cqc = 0;
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) cqc += e.c[i] * q[i][j] * e.c[j];
    e.r = Rat(2 * n) + cqc;
    return e;
}

void enumerate_rec(const EllipsoidData& e, int i, std::vector<Rat>& z, const Rat& rem, IVec& x,
                   std::vector<IVec>& out, long long budget) {
    if (i < 0) {
        if (static_cast<long long>(out.size()) >= budget)
            throw BudgetExceeded("sublevel enumeration budget exceeded");
        out.push_back(x);
        return;
    }
    // z_i = (x_i - c_i) + t_i with t_i = sum_{l>i} L_li (x_l - c_l)
    Rat t = 0;
    for (int l = i + 1; l < e.n; ++l) t += e.l[l][i] * (Rat(x[l]) - e.c[l]);
    Rat gamma = e.c[i] - t;  // condition: d_i (x_i - gamma)^2 <= rem
    Int start = rat_floor(gamma);
    for (Int m = start;; --m) {
        Rat diff = Rat(m) - gamma;
        Rat used = e.d[i] * diff * diff;
        if (used > rem) break;
        x[i] = to_ll(m);
        z[i] = diff + t;
        enumerate_rec(e, i - 1, z, rem - used, x, out, budget);
    }
    for (Int m = start + 1;; ++m) {
        Rat diff = Rat(m) - gamma;
        Rat used = e.d[i] * diff * diff;
        if (used > rem) break;
        x[i] = to_ll(m);
        z[i] = diff + t;
        enumerate_rec(e, i - 1, z, rem - used, x, out, budget);
    }
}

SublevelSet finalize(const IntersectionForm& form, const CharVector& k, long long n,
                     std::vector<IVec>&& pts) {
    std::sort(pts.begin(), pts.end());
    SublevelSet s;
    s.level = n;
    s.points = std::move(pts);
    s.chi_values.reserve(s.points.size());
    s.index.reserve(s.points.size() * 2);
    for (size_t i = 0; i < s.points.size(); ++i) {
        s.chi_values.push_back(chi(form, k, s.points[i]));
        s.index.emplace(s.points[i], static_cast<int>(i));
    }
    return s;
}

}  // namespace

SublevelSet enumerate_sublevel(const IntersectionForm& form, const CharVector& k, long long n,
                               long long budget) {
    EllipsoidData e = ellipsoid_data(form, k, n);
    std::vector<IVec> pts;
    if (e.r >= 0) {
        std::vector<Rat> z(form.n);
        IVec x(form.n, 0);
        enumerate_rec(e, form.n - 1, z, e.r, x, pts, budget);
    }
    return finalize(form, k, n, std::move(pts));
}

SublevelSet enumerate_sublevel_box_oracle(const IntersectionForm& form, const CharVector& k,
                                          long long n, long long budget) {
    EllipsoidData e = ellipsoid_data(form, k, n);
    std::vector<IVec> pts;
    if (e.r >= 0) {
        // |x_i - c_i|^2 <= (Q^{-1})_ii * r with Q^{-1} = -adj(M)/det(M)
        IVec lo(form.n), hi(form.n);
        Rat volume = 1;
        for (int i = 0; i < form.n; ++i) {
            Rat qinv_ii = -Rat(form.adjugate[i][i]) / Rat(form.det);
            Rat bound2 = qinv_ii * e.r;
            Int s = 0;
            while (Rat(s) * Rat(s) < bound2) ++s;
            lo[i] = to_ll(rat_ceil(e.c[i] - Rat(s)));
            hi[i] = to_ll(rat_floor(e.c[i] + Rat(s)));
            volume *= Rat(hi[i] - lo[i] + 1);
        }
        if (volume > budget) throw BudgetExceeded("box oracle budget exceeded");
        IVec x = lo;
        while (true) {
            if (chi(form, k, x) <= n) pts.push_back(x);
            int i = 0;
            while (i < form.n && x[i] == hi[i]) x[i] = lo[i], ++i;
            if (i == form.n) break;
            ++x[i];
        }
    }
    return finalize(form, k, n, std::move(pts));
}

Rat sublevel_box_volume(const IntersectionForm& form, const CharVector& k, long long n) {
    EllipsoidData e = ellipsoid_data(form, k, n);
    if (e.r < 0) return 0;
    // At level i of the recursion the scan satisfies d_i (x_i - gamma)^2 <= r,
    // so the fanout is at most 2*ceil(sqrt(r/d_i)) + 1; the product bounds the
    // leaf count of the recursion tree.
    Rat volume = 1;
    for (int i = 0; i < form.n; ++i) {
        Rat bound2 = e.r / e.d[i];
        Int s = 0;
        while (Rat(s) * Rat(s) < bound2) ++s;
        volume *= Rat(2 * s + 1);
    }
    return volume;
}

std::vector<std::pair<int, int>> SublevelSet::adjacency() const {
    std::vector<std::pair<int, int>> edges;
    int n = points.empty() ? 0 : static_cast<int>(points[0].size());
    for (size_t i = 0; i < points.size(); ++i) {
        IVec nb = points[i];
        for (int v = 0; v < n; ++v) {
            ++nb[v];
            auto it = index.find(nb);
            if (it != index.end()) edges.emplace_back(static_cast<int>(i), it->second);
            --nb[v];
        }
    }
    return edges;
}

std::vector<int> SublevelSet::component_ids() const {
    std::vector<int> parent(points.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : adjacency()) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> ids(points.size());
    for (size_t i = 0; i < points.size(); ++i) ids[i] = find(static_cast<int>(i));
    return ids;
}

std::vector<IVec> component_of(const IntersectionForm& form, const CharVector& k,
                               const IVec& start, long long n, long long budget) {
    if (chi(form, k, start) > n) return {};
    std::unordered_map<IVec, char, IVecHash> seen;
    std::queue<IVec> frontier;
    seen.emplace(start, 1);
    frontier.push(start);
    while (!frontier.empty()) {
        IVec x = frontier.front();
        frontier.pop();
        for (int v = 0; v < form.n; ++v) {
            for (int dir : {1, -1}) {
                IVec nb = x;
                nb[v] += dir;
                if (seen.count(nb) || chi(form, k, nb) > n) continue;
                if (static_cast<long long>(seen.size()) >= budget)
                    throw BudgetExceeded("component BFS budget exceeded");
                seen.emplace(nb, 1);
                frontier.push(nb);
            }
        }
    }
    std::vector<IVec> out;
    out.reserve(seen.size());
    for (auto& [p, _] : seen) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace latcoh
