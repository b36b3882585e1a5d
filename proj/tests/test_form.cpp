#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latcoh/form.hpp"

using namespace latcoh;
using latcoh_tests::load_graph;

TEST_CASE("known determinants and discriminant groups") {
    // det(E8 form) = 1, A2 = 3, single -2 = -2 (n odd/even sign included via Bareiss)
    IntersectionForm e8 = intersection_form(load_graph("e8.graph"));
    CHECK(e8.det == 1);
    CHECK(smith_normal_form(e8.M).group_order() == 1);

    IntersectionForm a2 = intersection_form(load_graph("a2.graph"));
    CHECK(abs(a2.det) == 3);
    CHECK(smith_normal_form(a2.M).group_order() == 3);

    // Sigma(2,3,7) is an integer homology sphere
    IntersectionForm s = intersection_form(load_graph("sigma_2_3_7.graph"));
    CHECK(abs(s.det) == 1);

    // (-1)-surgery on a knot: homology sphere
    IntersectionForm t = intersection_form(load_graph("surgery_8_11.graph"));
    CHECK(abs(t.det) == 1);
}

TEST_CASE("two-oracle determinant agreement: Bareiss vs LDL pivot product") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 8; ++i) {
        PlumbingGraph g = random_blown_up_tree(rng, 5, 2);
        IntersectionForm form = intersection_form(g);
        Rat prod = 1;
        for (const Rat& p : form.pivots) prod *= p;
        CHECK(Rat(form.det) == prod);
        CHECK(form.det == bareiss_determinant(form.M));
    }
}

TEST_CASE("LDL certifies definiteness: positive weight rejected") {
    PlumbingGraph g;
    g.names = {"a", "b"};
    g.weights = {-2, 2};
    g.edges = {{0, 1}};
    CHECK_THROWS_AS(intersection_form(g), NotNegativeDefinite);

    // -1 chain of length 2 has det 0 -> not definite
    PlumbingGraph h;
    h.names = {"a", "b"};
    h.weights = {-1, -1};
    h.edges = {{0, 1}};
    CHECK_THROWS_AS(intersection_form(h), NotNegativeDefinite);
}

TEST_CASE("adjugate identity adj(M)*M = det(M)*I") {
    IntersectionForm form = intersection_form(load_graph("surgery_8_11.graph"));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) {
            Int s = 0;
            for (int l = 0; l < form.n; ++l)
                s += form.adjugate[i][l] * Int(form.M[l][j]);
            CHECK(s == (i == j ? form.det : Int(0)));
        }
}

TEST_CASE("solve and integral_preimage are exact") {
    IntersectionForm form = intersection_form(load_graph("a2.graph"));
    std::vector<Rat> rhs = {Rat(1), Rat(0)};
    std::vector<Rat> y = form.solve(rhs);
    // M y = rhs
    for (int i = 0; i < form.n; ++i) {
        Rat s = 0;
        for (int j = 0; j < form.n; ++j) s += Rat(form.M[i][j]) * y[j];
        CHECK(s == rhs[i]);
    }
    IVec x;
    CHECK(form.integral_preimage(mat_vec(form.M, {2, -1}), &x));
    CHECK(x == IVec{2, -1});
    CHECK_FALSE(form.integral_preimage({1, 0}, nullptr));  // det 3, e1 not in M Z^2
}

TEST_CASE("SNF transform identity U*M*V = D and divisibility") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 6; ++it) {
        PlumbingGraph g = random_blown_up_tree(rng, 4, 2);
        IntersectionForm form = intersection_form(g);
        DiscriminantData snf = smith_normal_form(form.M);
        int n = form.n;
        for (int i = 0; i + 1 < n; ++i) {
            if (snf.divisors[i + 1] != 0) CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        s += snf.U[i][a] * Int(form.M[a][b]) * snf.V[b][j];
                CHECK(s == (i == j ? snf.divisors[i] : Int(0)));
            }
        CHECK(snf.group_order() == abs(form.det));
    }
}

TEST_CASE("column HNF is lower-triangular with positive pivots and same det") {
    IntersectionForm form = intersection_form(load_graph("e8.graph"));
    std::vector<std::vector<Int>> m(form.n, std::vector<Int>(form.n));
    for (int i = 0; i < form.n; ++i)
        for (int j = 0; j < form.n; ++j) m[i][j] = 2 * form.M[i][j];
    auto h = column_hnf(m);
    Int diag = 1;
    for (int i = 0; i < form.n; ++i) {
        CHECK(h[i][i] > 0);
        diag *= h[i][i];
        for (int j = i + 1; j < form.n; ++j) CHECK(h[i][j] == 0);
    }
    // |det(2M)| equals the pivot product of its HNF
    Int want = abs(form.det);
    for (int i = 0; i < form.n; ++i) want *= 2;
    CHECK(diag == want);
}
