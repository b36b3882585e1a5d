#include "latcoh/charlat.hpp"

#include <cassert>

namespace latcoh {

CharVector canonical_class(const IntersectionForm& form) {
    CharVector k;
    k.evals.resize(form.n);
    for (int v = 0; v < form.n; ++v) k.evals[v] = form.M[v][v] + 2;
    return k;
}

bool is_characteristic(const IntersectionForm& form, const CharVector& k) {
    if (static_cast<int>(k.evals.size()) != form.n) return false;
    for (int v = 0; v < form.n; ++v)
        if (((k.evals[v] - form.M[v][v]) % 2 + 2) % 2 != 0) return false;
    return true;
}

IVec pd(const IntersectionForm& form, const IVec& x) { return mat_vec(form.M, x); }

CharVector char_shift(const IntersectionForm& form, const CharVector& k, const IVec& x) {
    IVec mx = pd(form, x);
    CharVector r = k;
    for (int v = 0; v < form.n; ++v) r.evals[v] += 2 * mx[v];
    return r;
}

Rat k_squared(const IntersectionForm& form, const CharVector& k) {
    // k^T M^{-1} k = k^T adj(M) k / det(M), all-integer numerator
    Int num = 0;
    for (int i = 0; i < form.n; ++i) {
        Int row = 0;
        for (int j = 0; j < form.n; ++j) row += form.adjugate[i][j] * k.evals[j];
        num += k.evals[i] * row;
    }
    // cpp_rational rejects negative denominators; normalize the sign
    return form.det < 0 ? Rat(-num, -form.det) : Rat(num, form.det);
}

Rat weight_w(const IntersectionForm& form, const CharVector& k) {
    return -(k_squared(form, k) + form.n) / 8;
}

long long chi(const IntersectionForm& form, const CharVector& k, const IVec& x) {
    long long s = dot(k.evals, x) + form.pair(x, x);
    if (s % 2 != 0) throw std::logic_error("chi: parity failure (non-characteristic vector)");
    return -s / 2;
}

bool same_orbit(const IntersectionForm& form, const CharVector& k1, const CharVector& k2) {
    // k1 - k2 in 2M Z^n iff every U(2M)-transformed coordinate of the
    // difference is divisible by the corresponding SNF divisor.
    IMat m2(form.n, std::vector<long long>(form.n));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) m2[i][j] = 2 * form.M[i][j];
    DiscriminantData snf = smith_normal_form(m2);
    for (int i = 0; i < form.n; ++i) {
        Int s = 0;
        for (int j = 0; j < form.n; ++j) s += snf.U[i][j] * (k1.evals[j] - k2.evals[j]);
        if (s % snf.divisors[i] != 0) return false;
    }
    return true;
}

SpincOrbit orbit_normal_form(const IntersectionForm& form, const CharVector& k) {
    CharVector k0 = canonical_class(form);
    std::vector<std::vector<Int>> m2(form.n, std::vector<Int>(form.n));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) m2[i][j] = 2 * form.M[i][j];
    auto h = column_hnf(m2);
    std::vector<Int> v(form.n);
    for (int i = 0; i < form.n; ++i) v[i] = k.evals[i] - k0.evals[i];
    for (int i = 0; i < form.n; ++i) {
        Int q = v[i] / h[i][i];
        if (v[i] < 0 && v[i] % h[i][i] != 0) q -= 1;
        for (int r = i; r < form.n; ++r) v[r] -= q * h[r][i];
    }
    SpincOrbit orbit;
    orbit.normal_form = v;
    orbit.representative = k;
    return orbit;
}

Int orbit_count(const IntersectionForm& form) {
    IMat m2(form.n, std::vector<long long>(form.n));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) m2[i][j] = 2 * form.M[i][j];
    DiscriminantData snf = smith_normal_form(m2);
    Int order = snf.group_order();  // |Z^n / 2M Z^n| = |det 2M|
    Int denom = Int(1) << form.n;  // Char is a coset of 2 Z^n: |2Z^n / 2M Z^n| = order / 2^n
    if (order % denom != 0) throw std::logic_error("orbit_count: divisibility failure");
    return order / denom;
}

}  // namespace latcoh
