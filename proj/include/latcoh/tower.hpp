#pragma once

#include <optional>

#include "latcoh/gf2.hpp"
#include "latcoh/root.hpp"

namespace latcoh {

struct TruncationTooShallow : std::runtime_error {
    TruncationTooShallow(const std::string& what) : std::runtime_error(what) {}
};

struct EdgeConditionViolated : std::runtime_error {
    EdgeConditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// Element of T_0^+ = F[U, U^{-1}] / U*F[U] truncated at depth d:
// bits[j] is the coefficient of U^{-j}, 0 <= j < d.
struct TowerElement {
    std::vector<bool> bits;

    static TowerElement zero(int d) { return TowerElement{std::vector<bool>(d, false)}; }
    static TowerElement generator(int d);  // U^0
    bool is_zero() const;
    TowerElement u_shift() const;  // multiply by U: kills U^0, shifts the rest down
    bool operator==(const TowerElement& o) const { return bits == o.bits; }
};

// Function on the modeled root window (root vertices plus the truncated tail of
// the infinite chain); values indexed by TowerModel vertex position.
struct RootFunction {
    int depth = 0;
    std::vector<TowerElement> values;
    bool is_zero() const;
    bool operator==(const RootFunction& o) const {
        return depth == o.depth && values == o.values;
    }
};

enum class Tri { yes, no, unknown };

// Finite faithful model of H(R, chi): functions on the root's modeled vertices
// (unresolved partial-root leaves excluded) with depth-truncated tower values.
// Values above the window top are determined by applying U along the certified
// single chain, so the window needs no explicit tail.
class TowerModel {
   public:
    // Requires depth >= (stable_level - min modeled level) + 2 (faithfulness);
    // throws TruncationTooShallow otherwise.
    TowerModel(const GradedRoot& root, int depth);

    int size() const { return static_cast<int>(levels_.size()); }
    int depth() const { return depth_; }
    long long level(int i) const { return levels_[i]; }
    int up(int i) const { return up_[i]; }      // window index of level+1 vertex, -1 if none
    int root_id(int i) const { return root_ids_[i]; }  // -1 for pad chain vertices
    int window_index_of_root_vertex(int root_id) const;
    const GradedRoot& root() const { return *root_; }

    RootFunction zero() const;
    // psi0: generator at w0 = the C0 vertex, zero elsewhere; throws
    // EdgeConditionViolated if w0 has a lower neighbor (upstream bug).
    RootFunction psi0() const;
    RootFunction u_apply(const RootFunction& f) const;
    // Edge condition on the window: f(w)[j] == f(v)[j+1] for every edge v->w
    // and every j <= depth-2.
    bool validate(const RootFunction& f) const;
    bool in_ker_u(const RootFunction& f) const;

    struct ImUResult {
        Tri result = Tri::unknown;
        std::optional<RootFunction> witness;
    };
    // Does U^m psi' = target have a solution in H(R, chi)?  GF(2) elimination
    // over the window unknowns. On a partial root a feasible system yields
    // `unknown` (the witness may not extend); infeasibility is always sound.
    ImUResult in_pow_im_u(const RootFunction& target, int m) const;
    ImUResult in_im_u(const RootFunction& target) const { return in_pow_im_u(target, 1); }

   private:
    const GradedRoot* root_;
    int depth_;
    std::vector<long long> levels_;
    std::vector<int> up_;
    std::vector<int> root_ids_;
    std::vector<int> window_of_root_;
    int w0_index_ = -1;
};

// Faithfulness bound: (stable_level - min modeled level) + 2.
int default_depth(const GradedRoot& root);

// Structural test: single chain = one vertex per modeled level (complete
// roots) / a single leaf cluster (partial roots; equivalent).
bool is_rational(const GradedRoot& root);

struct Height {
    bool infinite = false;
    bool capped = false;  // iteration cap hit (reported as ">= value")
    int value = 0;
};

// ht = max { m : psi0 in U^m H(R,chi) }, solving U^m psi' = psi0 afresh per m;
// infinity iff rational.
Height height_of_tower(const GradedRoot& root, int cap = 64);

}  // namespace latcoh
