#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcoh/blowdown.hpp"
#include "latcoh/models.hpp"
#include "latcoh/root.hpp"
#include "latcoh/tower.hpp"
#include "latcoh/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotNegDef = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw latcoh::ParseError("cannot open file: " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

latcoh::CharVector parse_class(const latcoh::IntersectionForm& form, const std::string& spec) {
    if (spec == "canonical") return latcoh::canonical_class(form);
    latcoh::CharVector k;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) k.evals.push_back(std::stoll(tok));
    if (static_cast<int>(k.evals.size()) != form.n)
        throw latcoh::ParseError("--class vector length mismatch", 0);
    if (!latcoh::is_characteristic(form, k))
        throw latcoh::ParseError("--class vector is not characteristic", 0);
    return k;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace latcoh;
    CLI::App app{"0-dimensional lattice cohomology for negative-definite plumbing graphs"};
    app.require_subcommand(1);

    std::string path, class_spec = "canonical", dot_out;
    long long budget = kDefaultBudget;
    int depth = -1, max_level = 3, radius = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("path", path, "graph file (text or JSON)")->required();
        cmd->add_option("--budget", budget, "enumeration budget");
    };
    auto* c_validate = app.add_subcommand("validate", "parse and certify negative definiteness");
    add_common(c_validate);
    auto* c_root = app.add_subcommand("root", "graded root level table");
    add_common(c_root);
    c_root->add_option("--class", class_spec, "canonical or comma-separated evaluation vector");
    c_root->add_option("--dot", dot_out, "write DOT to this path");
    c_root->add_option("--max-level", max_level, "levels modeled above stable_level");
    auto* c_rational = app.add_subcommand("rational", "rationality test");
    add_common(c_rational);
    auto* c_blowdown = app.add_subcommand("blowdown", "blowdown trace JSON");
    add_common(c_blowdown);
    auto* c_sset = app.add_subcommand("sset", "D-classes and subset sums");
    add_common(c_sset);
    auto* c_verify = app.add_subcommand("verify", "full verification report");
    add_common(c_verify);
    c_verify->add_option("--depth", depth, "tower truncation depth");
    auto* c_models = app.add_subcommand("models-check", "model equivalence on a window");
    add_common(c_models);
    c_models->add_option("--class", class_spec, "canonical or comma-separated evaluation vector");
    c_models->add_option("--radius", radius, "box radius");
    c_models->add_option("--depth", depth, "tower truncation depth");
    auto* c_dot = app.add_subcommand("export-dot", "canonical graded root as DOT");
    add_common(c_dot);

    CLI11_PARSE(app, argc, argv);

    try {
        PlumbingGraph g = parse_graph_auto(read_file(path));
        if (c_validate->parsed()) {
            IntersectionForm form = intersection_form(g);
            nlohmann::ordered_json j;
            j["n"] = form.n;
            j["det"] = form.det.str();
            j["discriminant_group_order"] = smith_normal_form(form.M).group_order().str();
            j["negative_definite"] = true;
            std::cout << j.dump(2) << "\n";
            std::cerr << "ok: " << form.n << " vertices, negative definite\n";
        } else if (c_root->parsed()) {
            IntersectionForm form = intersection_form(g);
            CharVector k = parse_class(form, class_spec);
            RootOptions opts{budget, max_level};
            GradedRoot root = (class_spec == "canonical") ? canonical_root_model(form, opts)
                                                          : graded_root(form, k, opts);
            nlohmann::ordered_json j;
            j["complete"] = root.complete;
            j["min_level"] = root.min_level;
            j["stable_level"] = root.stable_level;
            j["levels"] = nlohmann::ordered_json::array();
            std::map<long long, int> counts;
            for (const auto& v : root.vertices) ++counts[v.level];
            for (auto [level, c] : counts)
                j["levels"].push_back({{"level", level}, {"vertices", c}});
            j["leaf_count"] = root.leaves.size();
            std::cout << j.dump(2) << "\n";
            if (!dot_out.empty()) {
                std::ofstream out(dot_out);
                out << root_to_dot(root);
                std::cerr << "wrote " << dot_out << "\n";
            }
        } else if (c_rational->parsed()) {
            IntersectionForm form = intersection_form(g);
            GradedRoot root = canonical_root_model(form, RootOptions{budget, 3});
            nlohmann::ordered_json j;
            j["rational"] = is_rational(root);
            std::cout << j.dump(2) << "\n";
        } else if (c_blowdown->parsed()) {
            IntersectionForm form = intersection_form(g);
            BlowdownTrace trace = blowdown_sequence(g, form);
            d_classes(form, trace);
            std::cout << trace_to_json(g, trace) << "\n";
        } else if (c_sset->parsed()) {
            IntersectionForm form = intersection_form(g);
            BlowdownTrace trace = blowdown_sequence(g, form);
            SSet s = s_set(form, trace);
            nlohmann::ordered_json j;
            j["d_classes"] = nlohmann::ordered_json::array();
            for (size_t m = 0; m < trace.d_order.size(); ++m)
                j["d_classes"].push_back(
                    {{"vertex", g.names[trace.d_order[m]]}, {"class", trace.d_classes[m]}});
            j["s_size"] = s.sums.size();
            j["s"] = s.sums;
            std::cout << j.dump(2) << "\n";
        } else if (c_verify->parsed()) {
            VerifyOptions opts;
            opts.budget = budget;
            opts.depth = depth;
            VerifyReport rep = run_verify(g, opts);
            std::cout << rep.to_json() << "\n";
            if (!rep.all_pass()) {
                std::cerr << "verification failed\n";
                return 1;
            }
            std::cerr << "all checks pass\n";
        } else if (c_models->parsed()) {
            IntersectionForm form = intersection_form(g);
            CharVector k = parse_class(form, class_spec);
            int d = depth > 0 ? depth : 3;
            ModelEquivalenceReport rep = check_model_equivalence(form, k, radius, d, budget);
            nlohmann::ordered_json j;
            j["box_radius"] = rep.box_radius;
            j["depth"] = rep.depth;
            j["dim_char"] = rep.dim_char;
            j["dim_l"] = rep.dim_l;
            j["dim_root"] = rep.dim_root;
            j["dims_agree"] = rep.dims_agree;
            j["iota_bijective"] = rep.iota_bijective;
            j["theta_bijective"] = rep.theta_bijective;
            j["pass"] = rep.pass();
            std::cout << j.dump(2) << "\n";
            if (!rep.pass()) return 1;
        } else if (c_dot->parsed()) {
            IntersectionForm form = intersection_form(g);
            GradedRoot root = canonical_root_model(form, RootOptions{budget, 3});
            std::cout << root_to_dot(root);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const NotNegativeDefinite& e) {
        std::cerr << e.what() << "\n";
        return kExitNotNegDef;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
