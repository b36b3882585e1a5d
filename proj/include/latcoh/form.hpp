#pragma once

#include <string>
#include <vector>

#include "latcoh/graph.hpp"
#include "latcoh/numeric.hpp"

namespace latcoh {

struct NotNegativeDefinite : std::runtime_error {
    int pivot_index;
    NotNegativeDefinite(int idx)
        : std::runtime_error("intersection form is not negative definite (pivot " +
                             std::to_string(idx) + ")"),
          pivot_index(idx) {}
};

// Smith normal form U*M*V = D with unimodular U, V.
struct DiscriminantData {
    std::vector<Int> divisors;  // d1 | d2 | ... | dn, nonnegative
    std::vector<std::vector<Int>> U, V;
    Int group_order() const;  // prod |di|
};

struct IntersectionForm {
    int n = 0;
    IMat M;                   // M_vv = weight, M_vw = 1 iff edge
    Int det;                  // exact determinant (Bareiss)
    std::vector<Rat> pivots;  // LDL^T pivots, all < 0

    // adjugate: adj * M = det(M) * I; used for exact M^{-1} solves.
    std::vector<std::vector<Int>> adjugate;

    long long weight(int v) const { return M[v][v]; }
    // x . y under M.
    long long pair(const IVec& x, const IVec& y) const { return dot(x, mat_vec(M, y)); }
    // Solve M*y = rhs exactly over the rationals.
    std::vector<Rat> solve(const std::vector<Rat>& rhs) const;
    // Is rhs in M * Z^n?  (integrality of adjugate*rhs / det)
    bool integral_preimage(const IVec& rhs, IVec* out = nullptr) const;
};

// Builds M from the graph and certifies negative definiteness by exact rational
// LDL^T; throws NotNegativeDefinite with the violating pivot index.
IntersectionForm intersection_form(const PlumbingGraph& g);

// Determinant by fraction-free (Bareiss) elimination — independent of the LDL^T
// route, used for two-oracle agreement.
Int bareiss_determinant(const IMat& m);

DiscriminantData smith_normal_form(const IMat& m);

// Column Hermite normal form of m (n x n, nonsingular): returns H with
// column span equal to m's, lower-triangular with positive pivots.
std::vector<std::vector<Int>> column_hnf(const std::vector<std::vector<Int>>& m);

}  // namespace latcoh
