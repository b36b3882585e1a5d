#include "latcoh/verify.hpp"

#include <sstream>

#include <json.hpp>

namespace latcoh {

bool VerifyReport::all_pass() const {
    bool im_ok = (psi0_in_im_u != Tri::unknown);
    bool ht_ok = rational ? ht.infinite : (!ht.infinite && ht.value == 0);
    return shape_chi_zero_on_c0 && shape_connected && shape_single_chain_above && s_equals_c0 &&
           psi0_in_ker_u && im_ok && rationality_agreement && ht_ok;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["graph"] = {{"n", n},
                  {"det", det.str()},
                  {"discriminant_group_order", group_order.str()}};
    j["k0"] = k0;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (auto [level, count] : vertices_per_level)
        levels.push_back({{"level", level}, {"vertices", count}});
    j["root"] = {{"complete", root_complete},
                 {"min_level", min_level},
                 {"stable_level", stable_level},
                 {"vertices_per_level", levels},
                 {"branch_count", branch_count},
                 {"leaf_count", leaf_count}};
    j["blowdown"] = {{"rounds", rounds}, {"d_size", d_size}, {"s_size", s_size}};
    auto tri = [](Tri t) {
        return t == Tri::yes ? "yes" : (t == Tri::no ? "no" : "unknown");
    };
    nlohmann::ordered_json ht_json;
    if (ht.infinite)
        ht_json = "infinity";
    else if (ht.capped)
        ht_json = ">=" + std::to_string(ht.value);
    else
        ht_json = ht.value;
    j["checks"] = {{"canonical_shape_chi_zero_on_c0", shape_chi_zero_on_c0},
                   {"canonical_shape_connected_above_zero", shape_connected},
                   {"canonical_shape_single_chain_above_zero", shape_single_chain_above},
                   {"s_equals_c0", s_equals_c0},
                   {"psi0_in_ker_u", psi0_in_ker_u},
                   {"psi0_in_im_u", tri(psi0_in_im_u)},
                   {"rational", rational},
                   {"rationality_agreement", rationality_agreement},
                   {"ht", ht_json}};
    j["all_pass"] = all_pass();
    if (!failure_witness.empty()) j["failure_witness"] = failure_witness;
    return j.dump(2);
}

VerifyReport run_verify(const PlumbingGraph& g, const VerifyOptions& opts) {
    VerifyReport rep;
    IntersectionForm form = intersection_form(g);
    rep.n = form.n;
    rep.det = form.det;
    rep.group_order = smith_normal_form(form.M).group_order();
    CharVector k0 = canonical_class(form);
    rep.k0 = k0.evals;

    RootOptions ropts;
    ropts.budget = opts.budget;
    GradedRoot root = canonical_root_model(form, ropts);
    rep.root_complete = root.complete;
    rep.min_level = root.min_level;
    rep.stable_level = root.stable_level;
    rep.leaf_count = root.leaves.size();
    {
        std::map<long long, int> counts;
        for (const auto& v : root.vertices) ++counts[v.level];
        rep.vertices_per_level.assign(counts.begin(), counts.end());
        auto deg = root.down_degree();
        for (int d : deg)
            if (d >= 2) ++rep.branch_count;
    }

    CanonicalShapeReport shape = verify_canonical_root_shape(form, root);
    rep.shape_chi_zero_on_c0 = shape.chi_zero_on_c0;
    rep.shape_connected = shape.connected_above_zero;
    rep.shape_single_chain_above = shape.single_chain_above_zero;

    BlowdownTrace trace = blowdown_sequence(g, form);
    d_classes(form, trace);  // proximity-recursion check
    rep.rounds = static_cast<int>(trace.rounds.size());
    rep.d_size = trace.d_order.size();
    SEqualsC0Report sc = verify_s_equals_c0(g, form, opts.budget);
    rep.s_size = sc.s_size;
    rep.s_equals_c0 = sc.equal && sc.paths_ok;

    int depth = opts.depth > 0 ? opts.depth : default_depth(root);
    TowerModel model(root, depth);
    RootFunction psi = model.psi0();
    rep.psi0_in_ker_u = model.in_ker_u(psi);
    rep.psi0_in_im_u = model.in_im_u(psi).result;
    rep.rational = is_rational(root);
    rep.rationality_agreement = (rep.rational && rep.psi0_in_im_u == Tri::yes) ||
                                (!rep.rational && rep.psi0_in_im_u == Tri::no);
    rep.ht = height_of_tower(root);

    std::ostringstream w;
    if (!shape.witness.empty()) w << shape.witness;
    if (!sc.witness.empty()) w << sc.witness;
    rep.failure_witness = w.str();
    return rep;
}

}  // namespace latcoh
