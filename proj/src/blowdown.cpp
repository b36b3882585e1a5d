#include "latcoh/blowdown.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

namespace latcoh {

BlowdownTrace blowdown_sequence(const PlumbingGraph& g, const IntersectionForm& form) {
    BlowdownTrace trace;
    trace.final_state.resize(form.n);
    for (int i = 0; i < form.n; ++i) {
        trace.final_state[i].cls.assign(form.n, 0);
        trace.final_state[i].cls[i] = 1;
    }
    auto& st = trace.final_state;
    int round = 0;
    while (true) {
        std::vector<int> eligible;
        for (int i = 0; i < form.n; ++i)
            if (st[i].alive && st[i].smooth && form.pair(st[i].cls, st[i].cls) == -1)
                eligible.push_back(i);
        if (eligible.empty()) break;
        for (size_t a = 0; a < eligible.size(); ++a)
            for (size_t b = a + 1; b < eligible.size(); ++b)
                if (form.pair(st[eligible[a]].cls, st[eligible[b]].cls) != 0)
                    throw InvariantViolated("simultaneous -1 classes intersect (" +
                                            g.names[eligible[a]] + ", " + g.names[eligible[b]] +
                                            ")");
        std::vector<IVec> ds;
        for (int i : eligible) {
            ds.push_back(st[i].cls);
            trace.d_order.push_back(i);
            trace.d_classes.push_back(st[i].cls);
        }
        // proximity: intersections of each blown-down class with every other
        // alive image, recorded at the moment of blowdown
        for (size_t a = 0; a < eligible.size(); ++a) {
            for (int b = 0; b < form.n; ++b) {
                if (!st[b].alive || b == eligible[a]) continue;
                long long mult = form.pair(ds[a], st[b].cls);
                if (mult != 0)
                    trace.proximities.push_back(Proximity{eligible[a], round, b, mult, false});
            }
        }
        // pushforward C -> C + (C.d) d; image smooth iff it met every d at most once
        for (int b = 0; b < form.n; ++b) {
            if (!st[b].alive) continue;
            if (std::find(eligible.begin(), eligible.end(), b) != eligible.end()) continue;
            for (const IVec& d : ds) {
                long long mult = form.pair(st[b].cls, d);
                if (mult >= 2) st[b].smooth = false;
                for (int c = 0; c < form.n; ++c) st[b].cls[c] += mult * d[c];
            }
        }
        for (int i : eligible) {
            st[i].alive = false;
            st[i].blown_down_in_round = round;
        }
        trace.rounds.push_back(std::move(eligible));
        ++round;
    }
    for (auto& p : trace.proximities) {
        p.target_blown_down_later = (st[p.target].blown_down_in_round >= 0);
        if (p.target_blown_down_later && p.multiplicity != 1)
            throw InvariantViolated("proximity multiplicity " + std::to_string(p.multiplicity) +
                                    " between blown-down classes " + g.names[p.source] + " -> " +
                                    g.names[p.target]);
    }
    return trace;
}

std::vector<IVec> d_classes(const IntersectionForm& form, const BlowdownTrace& trace) {
    // D^m = E^m + sum of D^n over recorded proximities E^n ~> E^m
    for (size_t m = 0; m < trace.d_order.size(); ++m) {
        int vm = trace.d_order[m];
        IVec rec(form.n, 0);
        rec[vm] = 1;
        for (const auto& p : trace.proximities) {
            if (p.target != vm || !p.target_blown_down_later) continue;
            auto it = std::find(trace.d_order.begin(), trace.d_order.end(), p.source);
            size_t idx = static_cast<size_t>(it - trace.d_order.begin());
            rec = vec_add(rec, trace.d_classes[idx]);
        }
        if (rec != trace.d_classes[m])
            throw InvariantViolated("RecursionMismatch: proximity recursion disagrees with the "
                                    "recorded class of D^" + std::to_string(m + 1));
    }
    return trace.d_classes;
}

SSet s_set(const IntersectionForm& form, const BlowdownTrace& trace) {
    const auto& ds = trace.d_classes;
    if (ds.size() > 20) throw InvariantViolated("|D| > 20: subset-sum cap exceeded");
    CharVector k0 = canonical_class(form);
    for (size_t i = 0; i < ds.size(); ++i) {
        if (dot(k0.evals, ds[i]) != 1) throw InvariantViolated("<K0, D> != 1");
        if (form.pair(ds[i], ds[i]) != -1) throw InvariantViolated("D.D != -1");
        if (chi(form, k0, ds[i]) != 0) throw InvariantViolated("chi_K0(D) != 0");
        for (size_t j = i + 1; j < ds.size(); ++j)
            if (form.pair(ds[i], ds[j]) != 0) throw InvariantViolated("D.D' != 0");
    }
    SSet s;
    s.sums.reserve(size_t(1) << ds.size());
    for (size_t mask = 0; mask < (size_t(1) << ds.size()); ++mask) {
        IVec sum(form.n, 0);
        for (size_t i = 0; i < ds.size(); ++i)
            if (mask >> i & 1) sum = vec_add(sum, ds[i]);
        if (chi(form, k0, sum) != 0) throw InvariantViolated("chi_K0 != 0 on a subset sum");
        s.sums.push_back(std::move(sum));
    }
    std::sort(s.sums.begin(), s.sums.end());
    return s;
}

SEqualsC0Report verify_s_equals_c0(const PlumbingGraph& g, const IntersectionForm& form,
                                   long long budget) {
    SEqualsC0Report rep;
    BlowdownTrace trace = blowdown_sequence(g, form);
    SSet s = s_set(form, trace);
    CharVector k0 = canonical_class(form);
    IVec zero(form.n, 0);
    std::vector<IVec> c0 = component_of(form, k0, zero, 0, budget);
    rep.s_size = s.sums.size();
    rep.c0_size = c0.size();
    rep.equal = (s.sums == c0);
    if (!rep.equal) {
        rep.witness = "S and C0 differ as point sets";
        rep.paths_ok = false;
        return rep;
    }
    // lexicographic t(F) recursion: write F = Fbar + D^u with u the summand of
    // smallest depth (blowdown round), and step to F - E^u = Fbar + (classes
    // proximate to D^u).  Every proximate class has depth < u while Fbar has
    // depth >= u, so the new summand set is again distinct, and t decreases
    // lexicographically (s_u drops by one, higher depths unchanged).
    std::unordered_set<IVec, IVecHash> s_points(s.sums.begin(), s.sums.end());
    size_t dn = trace.d_order.size();
    std::vector<std::vector<size_t>> prox_sets(dn);
    for (const auto& p : trace.proximities) {
        if (!p.target_blown_down_later) continue;
        auto src = std::find(trace.d_order.begin(), trace.d_order.end(), p.source);
        auto tgt = std::find(trace.d_order.begin(), trace.d_order.end(), p.target);
        prox_sets[tgt - trace.d_order.begin()].push_back(src - trace.d_order.begin());
    }
    std::vector<int> depth(dn);
    for (size_t i = 0; i < dn; ++i)
        depth[i] = trace.final_state[trace.d_order[i]].blown_down_in_round;
    rep.paths_ok = true;
    for (size_t mask = 0; mask < (size_t(1) << dn) && rep.paths_ok; ++mask) {
        std::vector<char> t(dn, 0);
        IVec point(form.n, 0);
        for (size_t i = 0; i < dn; ++i)
            if (mask >> i & 1) {
                t[i] = 1;
                point = vec_add(point, trace.d_classes[i]);
            }
        while (true) {
            int m = -1;
            for (size_t i = 0; i < dn; ++i)
                if (t[i] && (m < 0 || depth[i] < depth[m])) m = static_cast<int>(i);
            if (m < 0) break;  // reached 0
            t[m] = 0;
            bool distinct = true;
            for (size_t nidx : prox_sets[m]) {
                if (t[nidx]) distinct = false;
                t[nidx] = 1;
            }
            point[trace.d_order[m]] -= 1;  // the single basis step F -> F - E^u
            if (!distinct || !s_points.count(point)) {
                rep.paths_ok = false;
                rep.witness = "t(F) path left S";
                break;
            }
        }
    }
    return rep;
}

std::vector<CharVector> phi0_support(const IntersectionForm& form, const BlowdownTrace& trace) {
    SSet s = s_set(form, trace);
    CharVector k0 = canonical_class(form);
    Rat w0 = weight_w(form, k0);
    std::vector<CharVector> out;
    out.reserve(s.sums.size());
    for (const IVec& pt : s.sums) {
        CharVector k = char_shift(form, k0, pt);
        if (!is_characteristic(form, k)) throw InvariantViolated("phi0 support not characteristic");
        if (!same_orbit(form, k, k0)) throw InvariantViolated("phi0 support left the orbit [K0]");
        if (weight_w(form, k) != w0)
            throw InvariantViolated("phi0 support w-level mismatch");
        out.push_back(std::move(k));
    }
    return out;
}

std::string trace_to_json(const PlumbingGraph& g, const BlowdownTrace& trace) {
    nlohmann::ordered_json j;
    j["rounds"] = nlohmann::ordered_json::array();
    for (const auto& round : trace.rounds) {
        auto arr = nlohmann::ordered_json::array();
        for (int v : round) arr.push_back(g.names[v]);
        j["rounds"].push_back(arr);
    }
    j["d_classes"] = nlohmann::ordered_json::array();
    for (size_t m = 0; m < trace.d_order.size(); ++m)
        j["d_classes"].push_back({{"vertex", g.names[trace.d_order[m]]},
                                  {"class", trace.d_classes[m]}});
    j["proximities"] = nlohmann::ordered_json::array();
    for (const auto& p : trace.proximities)
        j["proximities"].push_back({{"source", g.names[p.source]},
                                    {"target", g.names[p.target]},
                                    {"multiplicity", p.multiplicity},
                                    {"target_blown_down", p.target_blown_down_later}});
    j["final_state"] = nlohmann::ordered_json::array();
    for (int i = 0; i < g.n(); ++i) {
        const auto& st = trace.final_state[i];
        j["final_state"].push_back({{"vertex", g.names[i]},
                                    {"class", st.cls},
                                    {"alive", st.alive},
                                    {"smooth", st.smooth},
                                    {"blown_down_in_round", st.blown_down_in_round}});
    }
    return j.dump(2);
}

}  // namespace latcoh
