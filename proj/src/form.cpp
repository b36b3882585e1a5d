#include "latcoh/form.hpp"

#include <algorithm>

namespace latcoh {

namespace {

// Exact rational LDL^T pivots of a symmetric matrix; throws NotNegativeDefinite
// at the first pivot >= 0.
std::vector<Rat> ldlt_pivots(const IMat& m) {
    int n = static_cast<int>(m.size());
    RMat a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    std::vector<Rat> pivots(n);
    for (int k = 0; k < n; ++k) {
        if (a[k][k] >= 0) throw NotNegativeDefinite(k);
        pivots[k] = a[k][k];
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return pivots;
}

std::vector<std::vector<Int>> to_int_mat(const IMat& m) {
    std::vector<std::vector<Int>> a(m.size(), std::vector<Int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) a[i][j] = m[i][j];
    return a;
}

std::vector<std::vector<Int>> identity_mat(int n) {
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

// Cofactor-free adjugate via rational inverse scaled by det. n is small.
std::vector<std::vector<Int>> adjugate_mat(const IMat& m, const Int& det) {
    int n = static_cast<int>(m.size());
    // Gauss-Jordan inverse over rationals.
    RMat a(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("adjugate: singular matrix");
        std::swap(a[p], a[c]);
        Rat piv = a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Int>> adj(n, std::vector<Int>(n));
    Rat rdet(det);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = a[i][n + j] * rdet;
            if (boost::multiprecision::denominator(v) != 1)
                throw std::runtime_error("adjugate: non-integer entry");
            adj[i][j] = boost::multiprecision::numerator(v);
        }
    return adj;
}

}  // namespace

Int bareiss_determinant(const IMat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    auto a = to_int_mat(m);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntersectionForm intersection_form(const PlumbingGraph& g) {
    g.validate();
    IntersectionForm f;
    f.n = g.n();
    f.M.assign(f.n, std::vector<long long>(f.n, 0));
    for (int i = 0; i < f.n; ++i) f.M[i][i] = g.weights[i];
    for (auto [a, b] : g.edges) f.M[a][b] = f.M[b][a] = 1;
    f.pivots = ldlt_pivots(f.M);  // throws NotNegativeDefinite
    f.det = bareiss_determinant(f.M);
    f.adjugate = adjugate_mat(f.M, f.det);
    return f;
}

std::vector<Rat> IntersectionForm::solve(const std::vector<Rat>& rhs) const {
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += Rat(adjugate[i][j]) * rhs[j];
        x[i] = s / Rat(det);
    }
    return x;
}

bool IntersectionForm::integral_preimage(const IVec& rhs, IVec* out) const {
    IVec x(n);
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += adjugate[i][j] * rhs[j];
        if (s % det != 0) return false;
        x[i] = to_ll(s / det);
    }
    if (out) *out = x;
    return true;
}

Int DiscriminantData::group_order() const {
    Int p = 1;
    for (const Int& d : divisors) p *= boost::multiprecision::abs(d);
    return p;
}

DiscriminantData smith_normal_form(const IMat& m) {
    int n = static_cast<int>(m.size());
    auto a = to_int_mat(m);
    auto u = identity_mat(n);
    auto v = identity_mat(n);
    using boost::multiprecision::abs;

    auto row_op = [&](int i, int j, const Int& f) {  // row_i -= f * row_j
        for (int c = 0; c < n; ++c) {
            a[i][c] -= f * a[j][c];
            u[i][c] -= f * u[j][c];
        }
    };
    auto col_op = [&](int i, int j, const Int& f) {  // col_i -= f * col_j
        for (int r = 0; r < n; ++r) {
            a[r][i] -= f * a[r][j];
            v[r][i] -= f * v[r][j];
        }
    };

    for (int t = 0; t < n; ++t) {
        // move a minimal nonzero entry of the trailing block to (t,t)
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
            if (pi < 0) break;  // trailing block zero
            std::swap(a[t], a[pi]);
            std::swap(u[t], u[pi]);
            for (int r = 0; r < n; ++r) {
                std::swap(a[r][t], a[r][pj]);
                std::swap(v[r][t], v[r][pj]);
            }
            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    row_op(i, t, a[i][t] / a[t][t]);
                    if (a[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    col_op(j, t, a[t][j] / a[t][t]);
                    if (a[t][j] != 0) clean = false;
                }
            if (!clean) continue;
            // ensure divisibility of the trailing block by the pivot
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_op(t, i, Int(-1));  // add row i into row t, then restart
                        divides = false;
                    }
            if (divides) break;
        }
    }
    DiscriminantData d;
    d.divisors.resize(n);
    for (int i = 0; i < n; ++i) {
        if (a[i][i] < 0) {
            for (int c = 0; c < n; ++c) u[i][c] = -u[i][c];
            a[i][i] = -a[i][i];
        }
        d.divisors[i] = a[i][i];
        if (a[i][i] == 0) throw std::runtime_error("smith_normal_form: singular matrix");
    }
    d.U = u;
    d.V = v;
    return d;
}

std::vector<std::vector<Int>> column_hnf(const std::vector<std::vector<Int>>& m) {
    int n = static_cast<int>(m.size());
    auto a = m;
    using boost::multiprecision::abs;
    // column echelon, processing rows top to bottom
    int col = 0;
    for (int row = 0; row < n; ++row) {
        while (true) {
            int p = -1;
            for (int j = col; j < n; ++j)
                if (a[row][j] != 0 && (p < 0 || abs(a[row][j]) < abs(a[row][p]))) p = j;
            if (p < 0) throw std::runtime_error("column_hnf: singular matrix");
            for (int r = 0; r < n; ++r) std::swap(a[r][p], a[r][col]);
            bool clean = true;
            for (int j = col + 1; j < n; ++j)
                if (a[row][j] != 0) {
                    Int f = a[row][j] / a[row][col];
                    for (int r = 0; r < n; ++r) a[r][j] -= f * a[r][col];
                    if (a[row][j] != 0) clean = false;
                }
            if (clean) break;
        }
        if (a[row][col] < 0)
            for (int r = 0; r < n; ++r) a[r][col] = -a[r][col];
        // reduce earlier columns against this pivot
        for (int j = 0; j < col; ++j) {
            Int f = a[row][j] / a[row][col];
            if (a[row][j] < 0 && a[row][j] % a[row][col] != 0) f -= 1;
            for (int r = 0; r < n; ++r) a[r][j] -= f * a[r][col];
        }
        ++col;
    }
    return a;
}

}  // namespace latcoh
