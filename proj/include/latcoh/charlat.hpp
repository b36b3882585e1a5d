#pragma once

#include "latcoh/form.hpp"
#include "latcoh/numeric.hpp"

namespace latcoh {

// Evaluation vector k with k_v = <K, v> on the canonical basis.
struct CharVector {
    IVec evals;
    bool operator==(const CharVector& o) const { return evals == o.evals; }
};

// Canonical orbit representative of (k - k0) modulo the column lattice of 2M.
struct SpincOrbit {
    CharVector representative;
    std::vector<Int> normal_form;
};

// K0 with (K0)_v = M_vv + 2.
CharVector canonical_class(const IntersectionForm& form);

bool is_characteristic(const IntersectionForm& form, const CharVector& k);

// <PD(x), .> = M*x.
IVec pd(const IntersectionForm& form, const IVec& x);

// K + 2 PD(x).
CharVector char_shift(const IntersectionForm& form, const CharVector& k, const IVec& x);

// k^T M^{-1} k, exact.
Rat k_squared(const IntersectionForm& form, const CharVector& k);

// w(K) = -(K^2 + n)/8.
Rat weight_w(const IntersectionForm& form, const CharVector& k);

// chi_K(x) = -(<K,x> + x.x)/2; throws on parity failure (non-characteristic K).
long long chi(const IntersectionForm& form, const CharVector& k, const IVec& x);

// k1 - k2 in 2M Z^n, decided via the SNF of 2M.
bool same_orbit(const IntersectionForm& form, const CharVector& k1, const CharVector& k2);

// Normal form via the column Hermite form of 2M; two CharVectors are in the
// same orbit iff their normal forms coincide.
SpincOrbit orbit_normal_form(const IntersectionForm& form, const CharVector& k);

// Number of orbits = |det M|, computed via the SNF of 2M (prod di / 2^n).
Int orbit_count(const IntersectionForm& form);

}  // namespace latcoh
