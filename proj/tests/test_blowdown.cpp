#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "latcoh/blowdown.hpp"

using namespace latcoh;
using latcoh_tests::load_graph;

namespace {
// prox set of depth index m: indices n with a recorded proximity D^n -> D^m
std::vector<std::vector<size_t>> prox_sets(const BlowdownTrace& trace) {
    size_t dn = trace.d_order.size();
    std::vector<std::vector<size_t>> out(dn);
    for (const auto& p : trace.proximities) {
        if (!p.target_blown_down_later) continue;
        auto src = std::find(trace.d_order.begin(), trace.d_order.end(), p.source);
        auto tgt = std::find(trace.d_order.begin(), trace.d_order.end(), p.target);
        out[tgt - trace.d_order.begin()].push_back(static_cast<size_t>(src - trace.d_order.begin()));
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}
}  // namespace

TEST_CASE("Sigma(2,3,7): three blowdowns, golden D classes") {
    PlumbingGraph g = load_graph("sigma_2_3_7.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    REQUIRE(trace.d_order.size() == 3);
    std::vector<std::string> order;
    for (int v : trace.d_order) order.push_back(g.names[v]);
    CHECK(order == std::vector<std::string>{"C", "A", "B"});
    int iA = g.index_of("A"), iB = g.index_of("B"), iC = g.index_of("C"), iF = g.index_of("F");
    auto e = [&](int i) { IVec v(form.n, 0); v[i] = 1; return v; };
    CHECK(trace.d_classes[0] == e(iC));
    CHECK(trace.d_classes[1] == vec_add(e(iA), e(iC)));
    IVec d3 = vec_add(vec_add(e(iA), e(iB)), vec_add(e(iC), e(iC)));
    CHECK(trace.d_classes[2] == d3);
    auto ps = prox_sets(trace);
    CHECK(ps[0].empty());
    CHECK(ps[1] == std::vector<size_t>{0});
    CHECK(ps[2] == std::vector<size_t>{0, 1});
    // the surviving curve F picks up a multiplicity-2 intersection and stops
    // being smooth; it must never enter the D list
    CHECK(std::find(trace.d_order.begin(), trace.d_order.end(), iF) == trace.d_order.end());
    bool saw_mult2 = false;
    for (const auto& p : trace.proximities)
        if (p.target == iF && p.multiplicity == 2) saw_mult2 = true;
    CHECK(saw_mult2);
    CHECK_FALSE(trace.final_state[iF].smooth);
    CHECK(trace.final_state[iF].alive);
    CHECK_NOTHROW(d_classes(form, trace));
    CHECK(s_set(form, trace).sums.size() == 8);
}

TEST_CASE("surgery (8,11) graph: golden proximity structure and D^6") {
    PlumbingGraph g = load_graph("surgery_8_11.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    REQUIRE(trace.d_order.size() == 6);
    REQUIRE(trace.rounds.size() == 6);  // one blowdown per round
    auto ps = prox_sets(trace);
    CHECK(ps[0].empty());
    CHECK(ps[1] == std::vector<size_t>{0});
    CHECK(ps[2] == std::vector<size_t>{0, 1});
    CHECK(ps[3] == std::vector<size_t>{1, 2});
    CHECK(ps[4] == std::vector<size_t>{3});
    CHECK(ps[5] == std::vector<size_t>{2, 3, 4});
    // D^6 = 8E^1 + 5E^2 + 3E^3 + 2E^4 + E^5 + E^6 in the blowdown basis order
    IVec expected(form.n, 0);
    long long coeff[6] = {8, 5, 3, 2, 1, 1};
    for (size_t m = 0; m < 6; ++m) expected[trace.d_order[m]] = coeff[m];
    CHECK(trace.d_classes[5] == expected);
    CHECK_NOTHROW(d_classes(form, trace));
    CHECK(s_set(form, trace).sums.size() == 64);
}

TEST_CASE("S = C0 with path certificates on the corpus") {
    for (const char* name : {"single_neg1.graph", "sigma_2_3_7.graph", "surgery_8_11.graph"}) {
        PlumbingGraph g = load_graph(name);
        IntersectionForm form = intersection_form(g);
        SEqualsC0Report rep = verify_s_equals_c0(g, form);
        CHECK_MESSAGE(rep.equal, name, ": ", rep.witness);
        CHECK_MESSAGE(rep.paths_ok, name, ": ", rep.witness);
        CHECK(rep.s_size == rep.c0_size);
    }
}

TEST_CASE("S = C0 on randomized blown-up trees") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 5) {
        PlumbingGraph g = random_blown_up_tree(rng, 4, 2);
        IntersectionForm form = intersection_form(g);
        SEqualsC0Report rep = verify_s_equals_c0(g, form);
        CHECK_MESSAGE((rep.equal && rep.paths_ok), g.serialize(), ": ", rep.witness);
        ++done;
    }
}

TEST_CASE("minimal case: no -1 vertices, D empty, C0 = {0}, phi0 on {K0}") {
    for (const char* name : {"single_neg2.graph", "a2.graph", "e8.graph"}) {
        PlumbingGraph g = load_graph(name);
        IntersectionForm form = intersection_form(g);
        BlowdownTrace trace = blowdown_sequence(g, form);
        CHECK(trace.d_order.empty());
        CHECK(trace.rounds.empty());
        SSet s = s_set(form, trace);
        CHECK(s.sums == std::vector<IVec>{IVec(form.n, 0)});
        CharVector k0 = canonical_class(form);
        std::vector<IVec> c0 = component_of(form, k0, IVec(form.n, 0), 0);
        CHECK(c0 == std::vector<IVec>{IVec(form.n, 0)});
        std::vector<CharVector> support = phi0_support(form, trace);
        REQUIRE(support.size() == 1);
        CHECK(support[0] == k0);
    }
}

TEST_CASE("phi0 support stays in the canonical orbit at constant w") {
    PlumbingGraph g = load_graph("surgery_8_11.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    std::vector<CharVector> support = phi0_support(form, trace);
    CHECK(support.size() == 64);
    CharVector k0 = canonical_class(form);
    Rat w0 = weight_w(form, k0);
    for (const CharVector& k : support) {
        CHECK(same_orbit(form, k, k0));
        CHECK(weight_w(form, k) == w0);
    }
}

TEST_CASE("trace JSON is deterministic and mentions every blowdown") {
    PlumbingGraph g = load_graph("sigma_2_3_7.graph");
    IntersectionForm form = intersection_form(g);
    BlowdownTrace trace = blowdown_sequence(g, form);
    std::string a = trace_to_json(g, trace);
    std::string b = trace_to_json(g, blowdown_sequence(g, form));
    CHECK(a == b);
    for (const char* name : {"\"A\"", "\"B\"", "\"C\""}) CHECK(a.find(name) != std::string::npos);
}
