#pragma once

#include "latcoh/sublevel.hpp"

namespace latcoh {

// All weak local minima: x with chi_K(x +- v) >= chi_K(x) for every basis v.
// Enumerated via the u-box u = Mx, u_v in [(M_vv - k_v)/2, -(M_vv + k_v)/2],
// with exact integrality filtering x = M^{-1} u.
std::vector<IVec> local_minima(const IntersectionForm& form, const CharVector& k,
                               long long budget = kDefaultBudget);

// An isolated plateau cluster of weak minima: a connected equal-level subset of
// the weak-minima set with no strictly lower neighbor and no equal-level
// neighbor outside the set. Leaf clusters are exactly the leaves of the graded
// root (every newborn component consists of weak minima; any plateau point that
// is not a weak minimum has a strict descent).
struct LeafCluster {
    long long level = 0;
    std::vector<IVec> points;  // sorted lexicographically
    const IVec& rep() const { return points.front(); }
};

std::vector<LeafCluster> leaf_clusters(const IntersectionForm& form, const CharVector& k,
                                       long long budget = kDefaultBudget);

struct RootVertex {
    int id = -1;
    long long level = 0;
    std::vector<IVec> points;  // component members at this level; empty if abstract
    int up = -1;               // id of the containing vertex at level+1; -1 if none modeled
    bool abstract_chain = false;  // trunk continuation without point data (partial roots)
    bool unresolved = false;      // partial roots: leaf with unknown up edge (excluded
                                  // from tower systems)
    IVec rep;                     // a member point (empty for pure chain vertices)
};

struct GradedRoot {
    // complete: vertices enumerate every component of every sublevel set in
    // [min_level, top_level]. Otherwise this is a certified partial root (see
    // the partial-certificate fields below).
    bool complete = true;
    long long min_level = 0;
    long long stable_level = 0;  // single chain certified for levels >= stable_level
    long long top_level = 0;     // highest explicitly modeled level
    std::vector<RootVertex> vertices;  // sorted by (level, id); ids are indices
    int zero_component_id = -1;        // vertex at level chi(0)=0 containing 0
    std::vector<LeafCluster> leaves;
    long long max_leaf_level = 0;

    // Partial-certificate data (complete == false): connectivity of every
    // sublevel n >= stable_level is proven by explicit leaf-to-0 witness paths
    // with max chi <= stable_level; disconnection below is certified when some
    // leaf lies outside the fully enumerated C0.
    bool stable_exact = true;
    long long witness_max_chi = 0;

    const RootVertex& vertex(int id) const { return vertices[id]; }
    std::vector<int> down_degree() const;  // per vertex, number of incoming up-edges
    bool single_chain() const;             // exactly one vertex per modeled level and
                                           // (partial) a single leaf cluster
    std::vector<int> vertices_at_level(long long n) const;
};

struct RootOptions {
    long long budget = kDefaultBudget;
    int extra_levels = 3;  // model this many levels above stable_level
};

// Dense graded root; throws BudgetExceeded beyond desk scale.
GradedRoot graded_root(const IntersectionForm& form, const CharVector& k,
                       const RootOptions& opts = {});

// Canonical-class root for the verification pipeline: dense when the budget
// allows, otherwise a certified partial root (requires all leaf levels <= 0).
GradedRoot canonical_root_model(const IntersectionForm& form, const RootOptions& opts = {});

struct CanonicalShapeReport {
    bool chi_zero_on_c0 = false;      // chi_{K0} == 0 on C0
    bool connected_above_zero = false;  // sublevel(n) connected for n in [1, stable+3]
    bool single_chain_above_zero = false;  // one vertex per level >= 1
    std::string witness;  // first failure description, empty if all pass
    bool all_pass() const {
        return chi_zero_on_c0 && connected_above_zero && single_chain_above_zero;
    }
};

CanonicalShapeReport verify_canonical_root_shape(const IntersectionForm& form,
                                                 const RootOptions& opts = {});
CanonicalShapeReport verify_canonical_root_shape(const IntersectionForm& form,
                                                 const GradedRoot& root);

// Graphviz DOT export; vertices labeled "level=chi, size=|component|", main
// trunk highlighted.
std::string root_to_dot(const GradedRoot& root);

}  // namespace latcoh
