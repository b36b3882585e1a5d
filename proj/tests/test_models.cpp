#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "latcoh/models.hpp"

using namespace latcoh;
using latcoh_tests::load_graph;

TEST_CASE("GF(2) solver: rank, consistency, solutions") {
    Gf2System sys(3);
    CHECK(sys.add_equation({0, 1}, true));
    CHECK(sys.add_equation({1, 2}, false));
    CHECK(sys.rank() == 2);
    auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK(((*sol)[0] ^ (*sol)[1]) == true);
    CHECK(((*sol)[1] ^ (*sol)[2]) == false);
    CHECK_FALSE(sys.add_equation({0, 2}, false));  // contradicts x0+x2 = 1
    CHECK_FALSE(sys.consistent());
}

TEST_CASE("parity union-find matches dense elimination on random systems") {
    std::mt19937_64 rng(97);
    for (int it = 0; it < 30; ++it) {
        int n = 12;
        ParityUnionFind uf(n);
        Gf2System sys(n);
        bool ok_uf = true, ok_sys = true;
        for (int e = 0; e < 18; ++e) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            bool parity = rng() & 1;
            if (a == b) continue;
            ok_uf = uf.equate(a, b, parity) && ok_uf;
            ok_sys = sys.add_equation({a, b}, parity) && ok_sys;
        }
        int pins = static_cast<int>(rng() % 3);
        for (int p = 0; p < pins; ++p) {
            int a = static_cast<int>(rng() % n);
            bool v = rng() & 1;
            ok_uf = uf.pin(a, v) && ok_uf;
            ok_sys = sys.add_equation({a}, v) && ok_sys;
        }
        CHECK(ok_uf == ok_sys);
        if (ok_sys) CHECK(uf.solution_dimension() == sys.num_vars() - sys.rank());
    }
}

TEST_CASE("lattice_box is the full box, lexicographic") {
    auto box = lattice_box(2, 1);
    CHECK(box.size() == 9);
    CHECK(box.front() == IVec{-1, -1});
    CHECK(box.back() == IVec{1, 1});
    CHECK(std::is_sorted(box.begin(), box.end()));
}

TEST_CASE("model equivalence on the three spec windows") {
    struct Case {
        const char* name;
        int radius;
        int depth;
    };
    for (Case c : {Case{"single_neg2.graph", 2, 3}, Case{"single_neg1.graph", 2, 3},
                   Case{"e8.graph", 1, 2}}) {
        IntersectionForm form = intersection_form(load_graph(c.name));
        CharVector k0 = canonical_class(form);
        ModelEquivalenceReport rep = check_model_equivalence(form, k0, c.radius, c.depth);
        CHECK_MESSAGE(rep.dims_agree, c.name, " dims ", rep.dim_char, " ", rep.dim_l, " ",
                      rep.dim_root);
        CHECK_MESSAGE(rep.iota_bijective, c.name);
        CHECK_MESSAGE(rep.theta_bijective, c.name);
    }
}

TEST_CASE("phi0 as a Char-model function validates and pulls back through iota") {
    PlumbingGraph g = load_graph("sigma_2_3_7.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    auto box = lattice_box(form.n, 4);  // radius 4: the S point 2A+B+4C must fit
    int depth = 3;
    CharModelFunction phi = phi0_char_model(form, trace, box, depth);
    CHECK(validate_char_model(form, phi));
    LModelFunction phil = iota_pullback(form, phi, box);
    CHECK(validate_l_model(form, phil));
    // support of the pullback = S points inside the box
    SSet s = s_set(form, trace);
    for (size_t i = 0; i < phil.points.size(); ++i) {
        bool in_s = std::binary_search(s.sums.begin(), s.sums.end(), phil.points[i]);
        CHECK(phil.values[i].is_zero() == !in_s);
    }
}

TEST_CASE("theta pushforward of phi0 equals psi0 on the window") {
    PlumbingGraph g = load_graph("sigma_2_3_7.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    GradedRoot root = canonical_root_model(form);
    int depth = default_depth(root);
    TowerModel model(root, depth);
    auto box = lattice_box(form.n, 4);
    CharModelFunction phi = phi0_char_model(form, trace, box, depth);
    LModelFunction phil = iota_pullback(form, phi, box);
    // theta is only defined on levels the root window models; drop the rest
    CharVector k0 = canonical_class(form);
    LModelFunction windowed;
    windowed.base = phil.base;
    windowed.depth = phil.depth;
    for (size_t i = 0; i < phil.points.size(); ++i)
        if (chi(form, k0, phil.points[i]) <= root.top_level) {
            windowed.points.push_back(phil.points[i]);
            windowed.values.push_back(phil.values[i]);
        }
    RootFunction pushed = theta_pushforward_check(form, windowed, model);
    RootFunction psi = model.psi0();
    // agreement on every window vertex whose level is represented in the box
    for (int i = 0; i < model.size(); ++i) {
        bool represented = false;
        if (model.root_id(i) >= 0)
            for (const IVec& p : root.vertex(model.root_id(i)).points)
                represented = represented || std::binary_search(box.begin(), box.end(), p);
        if (represented) CHECK(pushed.values[i] == psi.values[i]);
    }
}

TEST_CASE("theta pushforward rejects functions not constant on components") {
    PlumbingGraph g = load_graph("sigma_2_3_7.graph");
    IntersectionForm form = intersection_form(g);
    GradedRoot root = canonical_root_model(form);
    TowerModel model(root, default_depth(root));
    CharVector k0 = canonical_class(form);
    LModelFunction bad;
    bad.base = k0;
    bad.depth = model.depth();
    // two points of the same component of the zero level, different values
    const RootVertex& w0 = root.vertex(root.zero_component_id);
    REQUIRE(w0.points.size() >= 2);
    bad.points = {w0.points[0], w0.points[1]};
    bad.values = {TowerElement::generator(bad.depth), TowerElement::zero(bad.depth)};
    CHECK_THROWS_AS(theta_pushforward_check(form, bad, model), NotConstantOnComponent);
}
