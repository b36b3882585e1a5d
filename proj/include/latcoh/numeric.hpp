#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace latcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Lattice points / evaluation vectors in the canonical vertex basis.
using IVec = std::vector<long long>;
// Small square integer matrix, row-major.
using IMat = std::vector<std::vector<long long>>;
// Exact rational matrix.
using RMat = std::vector<std::vector<Rat>>;

inline long long dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec mat_vec(const IMat& m, const IVec& x) {
    if (m.empty() || m[0].size() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
    return r;
}

inline IVec vec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec vec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

struct IVecHash {
    size_t operator()(const IVec& v) const {
        size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= std::hash<long long>{}(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// floor(a/b) for rationals, exact.
inline Int rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);  // den > 0 by normalization
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

}  // namespace latcoh
