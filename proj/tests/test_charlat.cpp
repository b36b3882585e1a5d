#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latcoh/charlat.hpp"

using namespace latcoh;
using latcoh_tests::load_graph;

TEST_CASE("canonical class satisfies the adjunction evaluations") {
    for (const char* name : {"single_neg1.graph", "e8.graph", "sigma_2_3_7.graph"}) {
        PlumbingGraph g = load_graph(name);
        IntersectionForm form = intersection_form(g);
        CharVector k0 = canonical_class(form);
        for (int v = 0; v < form.n; ++v) CHECK(k0.evals[v] == form.weight(v) + 2);
        CHECK(is_characteristic(form, k0));
    }
}

TEST_CASE("chi additivity identity on random triples") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> coord(-4, 4);
    for (const char* name : {"a2.graph", "e8.graph", "surgery_8_11.graph"}) {
        IntersectionForm form = intersection_form(load_graph(name));
        CharVector k0 = canonical_class(form);
        for (int it = 0; it < 500; ++it) {
            IVec x(form.n), y(form.n), off(form.n);
            for (int i = 0; i < form.n; ++i) {
                x[i] = coord(rng);
                y[i] = coord(rng);
                off[i] = 2 * coord(rng);  // K = K0 + 2 PD(t) stays characteristic
            }
            CharVector k = char_shift(form, k0, off);
            REQUIRE(is_characteristic(form, k));
            CHECK(chi(form, k, vec_add(x, y)) == chi(form, k, x) + chi(form, k, y) - form.pair(x, y));
        }
    }
}

TEST_CASE("w/chi bridge identity: w(K + 2PD(x)) = w(K) + chi_K(x)") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> coord(-3, 3);
    for (const char* name : {"a2.graph", "sigma_2_3_7.graph"}) {
        IntersectionForm form = intersection_form(load_graph(name));
        CharVector k0 = canonical_class(form);
        for (int it = 0; it < 300; ++it) {
            IVec x(form.n);
            for (int i = 0; i < form.n; ++i) x[i] = coord(rng);
            CharVector k = char_shift(form, k0, x);
            CHECK(weight_w(form, k) == weight_w(form, k0) + Rat(chi(form, k0, x)));
        }
    }
}

TEST_CASE("k_squared matches the rational solve route") {
    for (const char* name : {"e8.graph", "surgery_8_11.graph"}) {
        IntersectionForm form = intersection_form(load_graph(name));
        CharVector k0 = canonical_class(form);
        // independent oracle: K^2 = k^T y with M y = k
        std::vector<Rat> rhs(form.n);
        for (int i = 0; i < form.n; ++i) rhs[i] = Rat(k0.evals[i]);
        std::vector<Rat> y = form.solve(rhs);
        Rat direct = 0;
        for (int i = 0; i < form.n; ++i) direct += Rat(k0.evals[i]) * y[i];
        CHECK(k_squared(form, k0) == direct);
    }
}

TEST_CASE("E8: K0 = 0, w = -1") {
    IntersectionForm form = intersection_form(load_graph("e8.graph"));
    CharVector k0 = canonical_class(form);
    CHECK(k0.evals == IVec(8, 0));
    CHECK(k_squared(form, k0) == 0);
    CHECK(weight_w(form, k0) == Rat(-1));
}

TEST_CASE("orbits: count, normal form, and shift membership") {
    IntersectionForm form = intersection_form(load_graph("a2.graph"));
    CHECK(orbit_count(form) == 3);
    CharVector k0 = canonical_class(form);
    // K and K + 2PD(x) share an orbit; K + 2e_1 generally does not
    CharVector shifted = char_shift(form, k0, {1, -2});
    CHECK(same_orbit(form, k0, shifted));
    CHECK(orbit_normal_form(form, k0).normal_form ==
          orbit_normal_form(form, shifted).normal_form);
    CharVector other = k0;
    other.evals[0] += 2;
    REQUIRE(is_characteristic(form, other));
    CHECK_FALSE(same_orbit(form, k0, other));
    CHECK(orbit_normal_form(form, k0).normal_form !=
          orbit_normal_form(form, other).normal_form);
}

TEST_CASE("chi parity guard rejects non-characteristic vectors") {
    IntersectionForm form = intersection_form(load_graph("a2.graph"));
    CharVector bad;
    bad.evals = {1, 0};  // <K, e2> = 0 but e2.e2 = -2 is even, e1: 1 vs -2 odd/even mismatch
    CHECK_FALSE(is_characteristic(form, bad));
    CHECK_THROWS(chi(form, bad, {1, 0}));
}
