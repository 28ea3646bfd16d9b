#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "plhyp/fiberprod.hpp"
#include "plhyp/fixtures.hpp"
#include "plhyp/homology.hpp"
#include "plhyp/io.hpp"
#include "plhyp/regneigh.hpp"

namespace {

using namespace plhyp;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitPrecondition = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

json input_hashes(const std::vector<std::pair<std::string, std::string>>& inputs) {
    json out = json::object();
    for (const auto& [name, path] : inputs) {
        out[name] = fnv1a_hex(canonical_dump(load_json_file(path)));
    }
    return out;
}

void emit_report(const std::string& command, const json& inputs, const json& body,
                 double ms) {
    json report{{"command", command},
                {"inputs", inputs},
                {"report", body},
                {"timing_ms", ms}};
    std::cout << report.dump(2) << "\n";
}

json count_summary(const Complex& c) {
    json counts = json::object();
    auto f = c.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) counts[std::to_string(d)] = f[d];
    return json{{"dim", c.dim()},
                {"vertices", c.vertex_count()},
                {"simplices_per_dim", counts},
                {"euler", euler_characteristic(c)}};
}

int cmd_validate_hs(const std::string& path) {
    Timer timer;
    HyperbolizedSimplex h;
    json inputs;
    try {
        inputs = input_hashes({{"hypersimplex", path}});
        h = hypersimplex_from_json(load_json_file(path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    ValidationReport r = validate(h);
    emit_report("validate-hs", inputs, validation_report_to_json(r), timer.ms());
    return r.valid() ? kExitOk : kExitCheckFailed;
}

int cmd_hyperbolize(const std::string& k_path, const std::string& hs_path,
                    const std::string& out_path, bool force) {
    Timer timer;
    ComplexPtr k;
    HyperbolizedSimplex h;
    json inputs;
    try {
        inputs = input_hashes({{"complex", k_path}, {"hypersimplex", hs_path}});
        k = std::make_shared<Complex>(complex_from_json(load_json_file(k_path)));
        h = hypersimplex_from_json(load_json_file(hs_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        HyperbolizationResult r = hyperbolize(k, h, force);
        save_text_file(out_path, result_to_json(r).dump(2) + "\n");
        json body{{"bK", count_summary(*r.bK)},
                  {"base", count_summary(*r.base.kpp.complex)},
                  {"hypersimplex_valid", r.hs_report.valid()},
                  {"out", out_path}};
        emit_report("hyperbolize", inputs, body, timer.ms());
        return kExitOk;
    } catch (const ValidationRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_homology(const std::string& path, const std::string& coeff_name) {
    Timer timer;
    Coeff coeff = Coeff::Z;
    if (coeff_name == "Z2") coeff = Coeff::Z2;
    else if (coeff_name == "Q") coeff = Coeff::Q;
    else if (coeff_name != "Z") {
        std::cerr << "precondition: unknown coefficient ring " << coeff_name << "\n";
        return kExitPrecondition;
    }
    try {
        json inputs = input_hashes({{"complex", path}});
        Complex c = complex_from_json(load_json_file(path));
        HomologyGroups h = homology(c, coeff);
        json body = homology_to_json(h);
        body["coeff"] = to_string(coeff);
        emit_report("homology", inputs, body, timer.ms());
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_regneigh(const std::string& k_path, const std::string& l_path) {
    Timer timer;
    try {
        json inputs = input_hashes({{"complex", k_path}, {"subcomplex", l_path}});
        auto k = std::make_shared<Complex>(complex_from_json(load_json_file(k_path)));
        Subcomplex l = subcomplex_from_json(k, load_json_file(l_path));
        RegularNeighborhood rn = regular_neighborhood(k, l);
        CollapseCertificate collapse = greedy_collapse_to(rn.nbhd, rn.core);
        Complex nbhd = rn.nbhd.as_complex();
        Complex frontier = rn.frontier.as_complex();
        json body{{"core_size", rn.core.size()},
                  {"nbhd", count_summary(nbhd)},
                  {"frontier",
                   json{{"components", frontier.component_count()},
                        {"euler", euler_characteristic(frontier)},
                        {"size", rn.frontier.size()}}},
                  {"collapses_to_core", collapse.complete},
                  {"collapse_steps", collapse.steps.size()},
                  {"homology_nbhd", homology_to_json(homology(nbhd, Coeff::Z))},
                  {"warnings", rn.warnings}};
        emit_report("regneigh", inputs, body, timer.ms());
        return collapse.complete ? kExitOk : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_verify_pullback(const std::string& k_path, const std::string& l_path,
                        const std::string& hs_path, bool force) {
    Timer timer;
    try {
        json inputs = input_hashes(
            {{"complex", k_path}, {"subcomplex", l_path}, {"hypersimplex", hs_path}});
        auto k = std::make_shared<Complex>(complex_from_json(load_json_file(k_path)));
        Subcomplex l = subcomplex_from_json(k, load_json_file(l_path));
        HyperbolizedSimplex h = hypersimplex_from_json(load_json_file(hs_path));
        PullbackReport report = verify_pullback(k, l, h, force);
        emit_report("verify-pullback", inputs, pullback_report_to_json(report), timer.ms());
        return report.ok ? kExitOk : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_verify_properties(const std::string& k_path, const std::string& hs_path,
                          bool force) {
    Timer timer;
    try {
        json inputs = input_hashes({{"complex", k_path}, {"hypersimplex", hs_path}});
        auto k = std::make_shared<Complex>(complex_from_json(load_json_file(k_path)));
        HyperbolizedSimplex h = hypersimplex_from_json(load_json_file(hs_path));
        HyperbolizationResult r = hyperbolize(k, h, force);
        bool pi0 = verify_pi0(r);
        bool skel = verify_one_skeleton(r);
        // the one-skeleton can only be an isomorphism when every edge
        // preimage is a single arc; otherwise it is honestly a covering
        bool skel_applicable = h.n < 1 || has_single_arc_edge_preimages(h);
        bool surj_z = is_surjective_on_homology(r.h, Coeff::Z);
        bool surj_z2 = is_surjective_on_homology(r.h, Coeff::Z2);
        bool surj_q = is_surjective_on_homology(r.h, Coeff::Q);
        LinkReport links = verify_links(r);
        json link_failures = json::array();
        for (const auto& f : links.failures) {
            link_failures.push_back(json{{"bK_vertex", f.bk_vertex},
                                         {"base_vertex", f.base_vertex},
                                         {"note", f.note}});
        }
        bool ok = pi0 && (skel || !skel_applicable) && surj_z && surj_z2 && surj_q &&
                  links.all_match;
        json body{{"pi0_bijective", pi0},
                  {"one_skeleton_isomorphism", skel},
                  {"one_skeleton_applicable", skel_applicable},
                  {"homology_surjective",
                   json{{"Z", surj_z}, {"Z2", surj_z2}, {"Q", surj_q}}},
                  {"links",
                   json{{"all_match", links.all_match},
                        {"full_isomorphism_mode", links.full_isomorphism_mode},
                        {"vertices_checked", links.vertices_checked},
                        {"failures", link_failures}}},
                  {"all", ok}};
        emit_report("verify-properties", inputs, body, timer.ms());
        return ok ? kExitOk : kExitCheckFailed;
    } catch (const ValidationRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_search_toy(int max_vertices, const std::string& t_path, bool skip_proper,
                   const std::string& out_path) {
    Timer timer;
    try {
        TriangulationOfDelta t;
        json inputs = json::object();
        if (t_path.empty()) {
            t = barycentric_triangulation(2);
            inputs["triangulation"] = "barycentric(2)";
        } else {
            inputs = input_hashes({{"triangulation", t_path}});
            t = triangulation_from_json(load_json_file(t_path));
        }
        SearchResult r = search_toy_hypersimplex(2, max_vertices, t, skip_proper);
        json body{{"max_vertices", max_vertices},
                  {"candidates_checked", r.candidates_checked},
                  {"found", r.found.has_value()}};
        if (r.found) {
            body["counts"] = count_summary(*r.found->x);
            if (!out_path.empty()) {
                save_text_file(out_path, hypersimplex_to_json(*r.found).dump(2) + "\n");
                body["out"] = out_path;
            }
        }
        emit_report("search-toy", inputs, body, timer.ms());
        return r.found ? kExitOk : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_export_off(const std::string& path, const std::string& out_path) {
    try {
        Complex c = complex_from_json(load_json_file(path));
        std::string off = export_off(c);
        if (out_path.empty()) std::cout << off;
        else save_text_file(out_path, off);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial hyperbolization via fiber products, with regular "
                 "neighborhood verification"};
    app.require_subcommand(1);

    std::string path, k_path, l_path, hs_path, out_path, t_path, coeff = "Z";
    bool force = false, skip_proper = false;
    int max_vertices = 11;

    auto* validate_cmd = app.add_subcommand("validate-hs", "validate a hyperbolized simplex");
    validate_cmd->add_option("path", path, "hypersimplex JSON")->required();

    auto* hyper = app.add_subcommand("hyperbolize", "fiber product hyperbolization of a complex");
    hyper->add_option("complex", k_path)->required();
    hyper->add_option("hypersimplex", hs_path)->required();
    hyper->add_option("out", out_path)->required();
    hyper->add_flag("--force", force, "proceed with an invalid hypersimplex");

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion of a complex");
    hom->add_option("path", path)->required();
    hom->add_option("--coeff", coeff, "Z, Z2 or Q");

    auto* reg = app.add_subcommand("regneigh", "regular neighborhood as a second-derived star");
    reg->add_option("complex", k_path)->required();
    reg->add_option("subcomplex", l_path)->required();

    auto* pull = app.add_subcommand("verify-pullback", "regular neighborhood pullback battery");
    pull->add_option("complex", k_path)->required();
    pull->add_option("subcomplex", l_path)->required();
    pull->add_option("hypersimplex", hs_path)->required();
    pull->add_flag("--force", force);

    auto* props = app.add_subcommand("verify-properties",
                                     "one-skeleton, pi0, homology surjectivity and link battery");
    props->add_option("complex", k_path)->required();
    props->add_option("hypersimplex", hs_path)->required();
    props->add_flag("--force", force);

    auto* search = app.add_subcommand("search-toy", "search small hyperbolized 2-simplices");
    search->add_option("--max-vertices", max_vertices);
    search->add_option("--triangulation", t_path, "triangulation JSON (default: barycentric)");
    search->add_flag("--skip-proper", skip_proper, "hunt for improper candidates instead");
    search->add_option("--out", out_path, "write the found hypersimplex here");

    auto* off = app.add_subcommand("export-off", "spring-embedded OFF export (presentation only)");
    off->add_option("path", path)->required();
    off->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (validate_cmd->parsed()) return cmd_validate_hs(path);
    if (hyper->parsed()) return cmd_hyperbolize(k_path, hs_path, out_path, force);
    if (hom->parsed()) return cmd_homology(path, coeff);
    if (reg->parsed()) return cmd_regneigh(k_path, l_path);
    if (pull->parsed()) return cmd_verify_pullback(k_path, l_path, hs_path, force);
    if (props->parsed()) return cmd_verify_properties(k_path, hs_path, force);
    if (search->parsed()) return cmd_search_toy(max_vertices, t_path, skip_proper, out_path);
    if (off->parsed()) return cmd_export_off(path, out_path);
    return kExitPrecondition;
}
