#include <map>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latcoh/blowdown.hpp"
#include "latcoh/models.hpp"
#include "latcoh/root.hpp"
#include "latcoh/tower.hpp"
#include "latcoh/verify.hpp"

namespace py = pybind11;
using namespace latcoh;

namespace {

IntersectionForm form_of(const PlumbingGraph& g) { return intersection_form(g); }

}  // namespace

PYBIND11_MODULE(_latcoh, m) {
    m.doc() = "0-dimensional lattice cohomology for negative-definite plumbing graphs";

    py::register_exception<ParseError>(m, "GraphParseError");
    py::register_exception<NotNegativeDefinite>(m, "NotNegativeDefiniteError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
    py::register_exception<InvariantViolated>(m, "InvariantViolatedError");

    py::class_<PlumbingGraph>(m, "PlumbingGraph")
        .def_readonly("names", &PlumbingGraph::names)
        .def_readonly("weights", &PlumbingGraph::weights)
        .def_readonly("edges", &PlumbingGraph::edges)
        .def("n", &PlumbingGraph::n)
        .def("serialize", &PlumbingGraph::serialize)
        .def("serialize_json", &PlumbingGraph::serialize_json)
        .def("to_dot", &PlumbingGraph::to_dot);

    m.def("parse_graph", &parse_graph_auto, py::arg("text"),
          "Parse the text or JSON graph format (auto-detected).");

    m.def("validate", [](const PlumbingGraph& g) {
        IntersectionForm form = form_of(g);
        py::dict out;
        out["n"] = form.n;
        out["det"] = form.det.str();
        out["discriminant_group_order"] = smith_normal_form(form.M).group_order().str();
        out["negative_definite"] = true;
        return out;
    });

    m.def("canonical_class", [](const PlumbingGraph& g) {
        return canonical_class(form_of(g)).evals;
    });

    m.def("chi", [](const PlumbingGraph& g, const IVec& k, const IVec& x) {
        IntersectionForm form = form_of(g);
        return chi(form, CharVector{k}, x);
    }, py::arg("graph"), py::arg("k"), py::arg("x"),
       "chi_K(x) = -(<K,x> + x.x)/2 for a characteristic evaluation vector k.");

    m.def("graded_root", [](const PlumbingGraph& g, long long budget) {
        IntersectionForm form = form_of(g);
        GradedRoot root = canonical_root_model(form, RootOptions{budget, 3});
        py::dict out;
        out["complete"] = root.complete;
        out["min_level"] = root.min_level;
        out["stable_level"] = root.stable_level;
        out["leaf_count"] = root.leaves.size();
        out["rational"] = is_rational(root);
        py::list levels;
        std::map<long long, int> counts;
        for (const auto& v : root.vertices) ++counts[v.level];
        for (auto [level, count] : counts) {
            py::dict e;
            e["level"] = level;
            e["vertices"] = count;
            levels.append(e);
        }
        out["levels"] = levels;
        return out;
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget);

    m.def("is_rational", [](const PlumbingGraph& g, long long budget) {
        return is_rational(canonical_root_model(form_of(g), RootOptions{budget, 3}));
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget);

    m.def("blowdown", [](const PlumbingGraph& g) {
        IntersectionForm form = form_of(g);
        BlowdownTrace trace = blowdown_sequence(g, form);
        d_classes(form, trace);
        return trace_to_json(g, trace);
    }, "Blowdown trace as a JSON string (rounds, D classes, proximities).");

    m.def("s_set", [](const PlumbingGraph& g) {
        IntersectionForm form = form_of(g);
        return s_set(form, blowdown_sequence(g, form)).sums;
    });

    m.def("height", [](const PlumbingGraph& g, long long budget) -> py::object {
        GradedRoot root = canonical_root_model(form_of(g), RootOptions{budget, 3});
        Height h = height_of_tower(root);
        if (h.infinite) return py::str("infinity");
        return py::int_(h.value);
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget);

    m.def("verify", [](const PlumbingGraph& g, long long budget, int depth) {
        VerifyOptions opts;
        opts.budget = budget;
        opts.depth = depth;
        return run_verify(g, opts).to_json();
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget, py::arg("depth") = -1,
       "Full verification report as a JSON string.");

    m.def("models_check", [](const PlumbingGraph& g, int radius, int depth, long long budget) {
        IntersectionForm form = form_of(g);
        ModelEquivalenceReport rep =
            check_model_equivalence(form, canonical_class(form), radius, depth, budget);
        py::dict out;
        out["dim_char"] = rep.dim_char;
        out["dim_l"] = rep.dim_l;
        out["dim_root"] = rep.dim_root;
        out["dims_agree"] = rep.dims_agree;
        out["iota_bijective"] = rep.iota_bijective;
        out["theta_bijective"] = rep.theta_bijective;
        out["pass"] = rep.pass();
        return out;
    }, py::arg("graph"), py::arg("radius") = 1, py::arg("depth") = 3,
       py::arg("budget") = kDefaultBudget);

    m.def("export_dot", [](const PlumbingGraph& g, long long budget) {
        return root_to_dot(canonical_root_model(form_of(g), RootOptions{budget, 3}));
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget);
}
