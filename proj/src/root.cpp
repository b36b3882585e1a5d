#include "latcoh/root.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace latcoh {

std::vector<IVec> local_minima(const IntersectionForm& form, const CharVector& k,
                               long long budget) {
    // Weak minimum <=> -chi_K(-v) <= x.v <= chi_K(v) for every basis v, i.e.
    // u = Mx lies in the box [(M_vv - k_v)/2, -(M_vv + k_v)/2]^n.
    IVec lo(form.n), hi(form.n);
    Rat volume = 1;
    for (int v = 0; v < form.n; ++v) {
        lo[v] = (form.M[v][v] - k.evals[v]) / 2;
        hi[v] = -(form.M[v][v] + k.evals[v]) / 2;
        if (lo[v] > hi[v]) return {};
        volume *= Rat(hi[v] - lo[v] + 1);
    }
    if (volume > budget) throw BudgetExceeded("local minima box budget exceeded");
    std::vector<IVec> out;
    IVec u = lo;
    while (true) {
        IVec x;
        if (form.integral_preimage(u, &x)) out.push_back(x);
        int i = 0;
        while (i < form.n && u[i] == hi[i]) u[i] = lo[i], ++i;
        if (i == form.n) break;
        ++u[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LeafCluster> leaf_clusters(const IntersectionForm& form, const CharVector& k,
                                       long long budget) {
    std::vector<IVec> minima = local_minima(form, k, budget);
    std::unordered_set<IVec, IVecHash> in_w(minima.begin(), minima.end());
    std::unordered_set<IVec, IVecHash> assigned;
    std::vector<LeafCluster> out;
    for (const IVec& seed : minima) {
        if (assigned.count(seed)) continue;
        long long level = chi(form, k, seed);
        // flood the equal-level plateau cluster within W
        std::vector<IVec> cluster;
        std::queue<IVec> q;
        q.push(seed);
        assigned.insert(seed);
        bool leaf = true;
        while (!q.empty()) {
            IVec x = q.front();
            q.pop();
            cluster.push_back(x);
            for (int v = 0; v < form.n; ++v) {
                for (int dir : {1, -1}) {
                    IVec nb = x;
                    nb[v] += dir;
                    long long c = chi(form, k, nb);
                    if (c < level) {
                        leaf = false;  // strict descent: not a newborn component
                    } else if (c == level) {
                        if (!in_w.count(nb)) {
                            leaf = false;  // plateau leaves W: that point has a descent
                        } else if (!assigned.count(nb)) {
                            assigned.insert(nb);
                            q.push(nb);
                        }
                    }
                }
            }
        }
        if (leaf) {
            std::sort(cluster.begin(), cluster.end());
            out.push_back(LeafCluster{level, std::move(cluster)});
        }
    }
    std::sort(out.begin(), out.end(), [](const LeafCluster& a, const LeafCluster& b) {
        return std::tie(a.level, a.points) < std::tie(b.level, b.points);
    });
    return out;
}

std::vector<int> GradedRoot::down_degree() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& v : vertices)
        if (v.up >= 0) ++deg[v.up];
    return deg;
}

std::vector<int> GradedRoot::vertices_at_level(long long n) const {
    std::vector<int> out;
    for (const auto& v : vertices)
        if (v.level == n) out.push_back(v.id);
    return out;
}

bool GradedRoot::single_chain() const {
    if (!complete) return leaves.size() == 1;
    for (long long n = min_level; n <= top_level; ++n)
        if (vertices_at_level(n).size() != 1) return false;
    return true;
}

GradedRoot graded_root(const IntersectionForm& form, const CharVector& k,
                       const RootOptions& opts) {
    GradedRoot root;
    root.complete = true;
    root.leaves = leaf_clusters(form, k, opts.budget);
    if (root.leaves.empty()) throw std::logic_error("graded_root: no leaf clusters");
    root.min_level = root.leaves.front().level;
    root.max_leaf_level = root.leaves.back().level;

    // cheap prescreen: if even the bounding box of the top-level ellipsoid is
    // far beyond the budget, fail fast instead of enumerating up to the cap
    if (sublevel_box_volume(form, k, root.max_leaf_level + opts.extra_levels) >
        Rat(opts.budget) * 100)
        throw BudgetExceeded("graded_root: sublevel bounding box beyond budget");

    long long stable = root.max_leaf_level;
    while (true) {
        SublevelSet s = enumerate_sublevel(form, k, stable, opts.budget);
        auto ids = s.component_ids();
        bool connected = !ids.empty();
        for (int id : ids)
            if (id != ids[0]) {
                connected = false;
                break;
            }
        if (connected) break;
        ++stable;
    }
    root.stable_level = stable;
    root.top_level = stable + opts.extra_levels;

    SublevelSet top = enumerate_sublevel(form, k, root.top_level, opts.budget);
    IVec zero(form.n, 0);
    int zero_index = top.index.at(zero);

    // per-level component structure from the single top enumeration
    std::vector<int> prev_vertex_of_point(top.points.size(), -1);
    for (long long n = root.min_level; n <= root.top_level; ++n) {
        // union-find over points with chi <= n
        std::vector<int> parent(top.points.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (size_t i = 0; i < top.points.size(); ++i) {
            if (top.chi_values[i] > n) continue;
            IVec nb = top.points[i];
            for (int v = 0; v < form.n; ++v) {
                ++nb[v];
                auto it = top.index.find(nb);
                if (it != top.index.end() && top.chi_values[it->second] <= n) {
                    int ra = find(static_cast<int>(i)), rb = find(it->second);
                    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
                }
                --nb[v];
            }
        }
        // components keyed by root representative = smallest contained index
        std::map<int, std::vector<int>> comps;
        for (size_t i = 0; i < top.points.size(); ++i)
            if (top.chi_values[i] <= n) comps[find(static_cast<int>(i))].push_back(static_cast<int>(i));
        std::vector<int> vertex_of_point(top.points.size(), -1);
        for (auto& [rep, members] : comps) {
            RootVertex v;
            v.id = static_cast<int>(root.vertices.size());
            v.level = n;
            v.rep = top.points[rep];
            for (int idx : members) {
                v.points.push_back(top.points[idx]);
                vertex_of_point[idx] = v.id;
            }
            // up-edge of the previous level's components into this one
            root.vertices.push_back(std::move(v));
        }
        for (size_t i = 0; i < top.points.size(); ++i) {
            int pv = prev_vertex_of_point[i];
            if (pv >= 0) root.vertices[pv].up = vertex_of_point[i];
        }
        if (n == 0) root.zero_component_id = vertex_of_point[zero_index];
        prev_vertex_of_point = std::move(vertex_of_point);
    }
    root.stable_exact = true;
    return root;
}

namespace {

// Greedy L1-descent toward 0 choosing the minimum-chi neighbor; returns the max
// chi along the path (including endpoints), or nullopt if it exceeds cap.
std::optional<long long> witness_path_max_chi(const IntersectionForm& form, const CharVector& k,
                                              IVec x, long long cap) {
    long long best = chi(form, k, x);
    while (true) {
        bool at_zero = true;
        for (long long c : x)
            if (c != 0) at_zero = false;
        if (at_zero) break;
        long long best_chi = 0;
        int best_v = -1;
        for (int v = 0; v < form.n; ++v) {
            if (x[v] == 0) continue;
            IVec nb = x;
            nb[v] -= (x[v] > 0) ? 1 : -1;
            long long c = chi(form, k, nb);
            if (best_v < 0 || c < best_chi) {
                best_chi = c;
                best_v = v;
            }
        }
        x[best_v] -= (x[best_v] > 0) ? 1 : -1;
        best = std::max(best, best_chi);
        if (best > cap) return std::nullopt;
    }
    return best;
}

GradedRoot partial_canonical_root(const IntersectionForm& form, const CharVector& k0,
                                  const RootOptions& opts) {
    GradedRoot root;
    root.complete = false;
    root.leaves = leaf_clusters(form, k0, opts.budget);
    if (root.leaves.empty()) throw std::logic_error("partial root: no leaf clusters");
    root.min_level = root.leaves.front().level;
    root.max_leaf_level = root.leaves.back().level;
    if (root.max_leaf_level > 0)
        throw BudgetExceeded("partial root: leaf above level 0, cannot certify");

    IVec zero(form.n, 0);
    std::vector<IVec> c0 = component_of(form, k0, zero, 0, opts.budget);
    std::unordered_set<IVec, IVecHash> c0_set(c0.begin(), c0.end());

    // witness paths from every leaf certify connectivity of sublevel(n) for all
    // n >= the worst max-chi (every component contains a leaf; all leaves join 0)
    long long worst = 0;
    for (const auto& leaf : root.leaves) {
        auto m = witness_path_max_chi(form, k0, leaf.rep(), 64);
        if (!m) throw BudgetExceeded("partial root: witness path exceeded cap");
        worst = std::max(worst, *m);
    }
    root.witness_max_chi = worst;

    const LeafCluster* outside = nullptr;
    for (const auto& leaf : root.leaves)
        if (!c0_set.count(leaf.rep())) {
            outside = &leaf;
            break;
        }
    long long stable = std::max<long long>(worst, outside ? 1 : 0);
    root.stable_level = stable;
    root.top_level = stable;
    // exact when disconnection one level below is certain
    root.stable_exact = (stable == 0) || (stable == 1 && outside != nullptr);

    // w0 = C0
    RootVertex w0;
    w0.id = 0;
    w0.level = 0;
    w0.points = c0;
    w0.rep = zero;
    root.vertices.push_back(std::move(w0));
    root.zero_component_id = 0;

    int wprime = -1;
    if (outside) {
        RootVertex wp;  // the level-0 component containing this leaf; points unknown
        wp.id = static_cast<int>(root.vertices.size());
        wp.level = 0;
        wp.rep = outside->rep();
        wp.abstract_chain = false;
        root.vertices.push_back(std::move(wp));
        wprime = root.vertices.back().id;
    }
    int prev = -1;
    for (long long n = 1; n <= stable; ++n) {
        RootVertex c;
        c.id = static_cast<int>(root.vertices.size());
        c.level = n;
        c.abstract_chain = true;
        root.vertices.push_back(std::move(c));
        if (n == 1) {
            root.vertices[0].up = root.vertices.back().id;
            if (wprime >= 0) root.vertices[wprime].up = root.vertices.back().id;
        } else {
            root.vertices[prev].up = root.vertices.back().id;
        }
        prev = root.vertices.back().id;
    }
    // remaining leaves outside C0 (unknown up-edges): excluded from tower systems
    for (const auto& leaf : root.leaves) {
        if (c0_set.count(leaf.rep())) continue;
        if (outside && leaf.points == outside->points) continue;
        RootVertex lv;
        lv.id = static_cast<int>(root.vertices.size());
        lv.level = leaf.level;
        lv.points = leaf.points;
        lv.rep = leaf.rep();
        lv.unresolved = true;
        root.vertices.push_back(std::move(lv));
    }
    std::sort(root.vertices.begin(), root.vertices.end(),
              [](const RootVertex& a, const RootVertex& b) { return a.id < b.id; });
    return root;
}

}  // namespace

GradedRoot canonical_root_model(const IntersectionForm& form, const RootOptions& opts) {
    CharVector k0 = canonical_class(form);
    try {
        return graded_root(form, k0, opts);
    } catch (const BudgetExceeded&) {
        return partial_canonical_root(form, k0, opts);
    }
}

CanonicalShapeReport verify_canonical_root_shape(const IntersectionForm& form,
                                                 const GradedRoot& root) {
    CharVector k0 = canonical_class(form);
    CanonicalShapeReport rep;
    std::ostringstream witness;

    const RootVertex& w0 = root.vertex(root.zero_component_id);
    rep.chi_zero_on_c0 = true;
    for (const IVec& p : w0.points)
        if (chi(form, k0, p) != 0) {
            rep.chi_zero_on_c0 = false;
            witness << "chi != 0 on a C0 point; ";
            break;
        }

    if (root.complete) {
        rep.connected_above_zero = true;
        rep.single_chain_above_zero = true;
        for (long long n = 1; n <= root.top_level; ++n) {
            size_t count = root.vertices_at_level(n).size();
            if (count != 1) {
                rep.connected_above_zero = false;
                rep.single_chain_above_zero = false;
                witness << "level " << n << " has " << count << " components; ";
                break;
            }
        }
    } else {
        // certified by witness paths: connected for every n >= witness_max_chi
        bool ok = root.witness_max_chi <= 1;
        rep.connected_above_zero = ok;
        rep.single_chain_above_zero = ok;
        if (!ok) witness << "connectivity certified only above level " << root.witness_max_chi << "; ";
    }
    rep.witness = witness.str();
    return rep;
}

CanonicalShapeReport verify_canonical_root_shape(const IntersectionForm& form,
                                                 const RootOptions& opts) {
    return verify_canonical_root_shape(form, canonical_root_model(form, opts));
}

std::string root_to_dot(const GradedRoot& root) {
    // main trunk: the chain upward from the zero component
    std::vector<char> trunk(root.vertices.size(), 0);
    for (int v = root.zero_component_id; v >= 0; v = root.vertices[v].up) trunk[v] = 1;
    std::ostringstream out;
    out << "graph graded_root {\n  rankdir=BT;\n";
    for (const auto& v : root.vertices) {
        out << "  v" << v.id << " [label=\"level=" << v.level;
        if (!v.points.empty()) out << ", size=" << v.points.size();
        out << "\"";
        if (trunk[v.id]) out << ", penwidth=2, color=red";
        if (v.abstract_chain || v.unresolved) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& v : root.vertices)
        if (v.up >= 0) out << "  v" << v.id << " -- v" << v.up << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace latcoh
