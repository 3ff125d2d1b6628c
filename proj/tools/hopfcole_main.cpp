// Command-line front end: construct special-polynomial families, build
// rational solutions, verify PDE residuals exactly, sample solutions onto
// CSV grids, and run the bundled verification suites.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcole/hopfcole.hpp"

namespace hc = hopfcole;

namespace {

// "min:max:steps" -> AxisSpec (validated later against min<max, steps>=2).
hc::AxisSpec parse_axis(const std::string& var, const std::string& text) {
    auto p1 = text.find(':');
    auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("axis '" + text + "': expected min:max:steps");
    hc::AxisSpec axis;
    axis.var = var;
    try {
        axis.min = std::stod(text.substr(0, p1));
        axis.max = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        axis.steps = std::stoi(text.substr(p2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("axis '" + text + "': malformed number");
    }
    axis.validate();
    return axis;
}

bool looks_like_range(const std::string& text) { return text.find(':') != std::string::npos; }

std::string canonical_kind(std::string kind) {
    // Accept both the short constructor names and the CamelCase JSON kinds.
    if (kind == "hermite2" || kind == "Hermite2") return "Hermite2";
    if (kind == "hermite_lacunary" || kind == "HermiteLacunary") return "HermiteLacunary";
    if (kind == "hermite3_complete" || kind == "Hermite3Complete") return "Hermite3Complete";
    if (kind == "hermite_complete_m" || kind == "HermiteCompleteM") return "HermiteCompleteM";
    if (kind == "laguerre2" || kind == "Laguerre2") return "Laguerre2";
    if (kind == "hybrid_l2" || kind == "HybridL2") return "HybridL2";
    if (kind == "bessel_c0" || kind == "BesselC0") return "BesselC0";
    if (kind == "shifted_hermite3" || kind == "ShiftedHermite3") return "ShiftedHermite3";
    throw std::invalid_argument("unknown family kind '" + kind + "'");
}

void write_text(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
    out << text;
}

struct SolutionChoice {
    bool phi = false, laguerre = false, hybrid = false, combined = false;
    int n = 0, m = 2;
    std::string alpha = "1", beta = "1", gamma = "1";

    int selected_count() const {
        return (phi ? 1 : 0) + (laguerre ? 1 : 0) + (hybrid ? 1 : 0) + (combined ? 1 : 0);
    }

    hc::RationalFn build() const {
        if (phi) return hc::phi_solution(n, m);
        if (laguerre) return hc::laguerre_solution(n);
        if (hybrid) return hc::hybrid_solution(n);
        if (combined)
            return hc::combined_solution(n, hc::Rational::from_string(alpha),
                                         hc::Rational::from_string(beta),
                                         hc::Rational::from_string(gamma));
        throw std::invalid_argument("pick one of --phi, --laguerre, --hybrid, --combined");
    }

    std::string time_var() const { return laguerre ? "t" : "y"; }
};

void add_solution_flags(CLI::App* cmd, SolutionChoice& sol) {
    cmd->add_flag("--phi", sol.phi, "log-derivative of the order-m lacunary family, over (x,y)");
    cmd->add_flag("--laguerre", sol.laguerre, "log-derivative of the Laguerre family, over (x,t)");
    cmd->add_flag("--hybrid", sol.hybrid, "log-derivative of the hybrid family, over (x,y)");
    cmd->add_flag("--combined", sol.combined, "shifted complete-family solution, over (x,y)");
    cmd->add_option("--n", sol.n, "degree");
    cmd->add_option("--m", sol.m, "equation order (with --phi)");
    cmd->add_option("--alpha", sol.alpha, "rational p/q (with --combined)");
    cmd->add_option("--beta", sol.beta, "rational p/q (with --combined)");
    cmd->add_option("--gamma", sol.gamma, "rational p/q (with --combined)");
}

int emit_grid_csv(const hc::RationalFn& u, const hc::GridSpec& grid, const std::string& output) {
    hc::SampleTable table = hc::sample(u, grid);
    std::ostringstream csv;
    hc::emit_csv(table, csv);
    write_text(csv.str(), output);
    return 0;
}

int run_fig_presets(int fig, const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::path dir = outdir.empty() ? fs::path(".") : fs::path(outdir);
    fs::create_directories(dir);
    auto emit_to = [&](const hc::RationalFn& u, const hc::GridSpec& grid, const std::string& name) {
        hc::SampleTable table = hc::sample(u, grid);
        std::ofstream out(dir / name);
        if (!out) throw std::runtime_error("cannot open output file '" + (dir / name).string() + "'");
        hc::emit_csv(table, out);
        std::cout << "wrote " << (dir / name).string() << "\n";
    };

    if (fig == 1) {
        const std::pair<int, int> presets[] = {{2, 2}, {4, 2}, {4, 3}, {9, 3}};
        const double ys[] = {0.5, 1.0, 2.0};
        for (auto [n, m] : presets)
            for (double y : ys) {
                hc::GridSpec grid;
                grid.axis = {"x", -5.0, 5.0, 400};
                grid.fixed["y"] = y;
                emit_to(hc::phi_solution(n, m), grid,
                        "fig1_phi_n" + std::to_string(n) + "_m" + std::to_string(m) + "_y" +
                            hc::format_double(y) + ".csv");
            }
        return 0;
    }
    if (fig == 2) {
        const std::pair<int, int> presets[] = {{10, 2}, {3, 3}, {10, 3}, {10, 7}};
        for (auto [n, m] : presets) {
            hc::GridSpec grid;
            grid.axis = {"x", -5.0, 5.0, 200};
            grid.second_axis = hc::AxisSpec{"y", 0.5, 2.0, 60};
            emit_to(hc::phi_solution(n, m), grid,
                    "fig2_phi_n" + std::to_string(n) + "_m" + std::to_string(m) + ".csv");
        }
        return 0;
    }
    if (fig == 3) {
        for (int n : {3, 7}) {
            hc::GridSpec grid;
            grid.axis = {"x", -5.0, 5.0, 400};
            grid.fixed["t"] = 1.0;
            emit_to(hc::laguerre_solution(n), grid, "fig3_laguerre_n" + std::to_string(n) + ".csv");
        }
        return 0;
    }
    throw std::invalid_argument("unknown figure preset");
}

int print_suite(const hc::SuiteResult& result, bool as_json, const std::string& output) {
    std::ostringstream text;
    if (as_json) {
        hc::json j;
        j["suite"] = result.suite;
        hc::json items = hc::json::array();
        for (const auto& it : result.items) {
            hc::json ji;
            ji["name"] = it.name;
            ji["passed"] = it.passed;
            if (!it.detail.empty()) ji["detail"] = it.detail;
            items.push_back(std::move(ji));
        }
        j["items"] = std::move(items);
        j["all_passed"] = result.all_passed();
        text << j.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& it : result.items) {
            if (it.passed) ++passed;
            text << (it.passed ? "PASS" : "FAIL") << "  " << it.name;
            if (!it.detail.empty()) text << "  (" << it.detail << ")";
            text << "\n";
        }
        text << "suite " << result.suite << ": " << passed << "/" << result.items.size()
             << " passed\n";
    }
    write_text(text.str(), output);
    return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact special-polynomial families, Hopf-Cole solutions, and PDE verification"};
    app.require_subcommand(1);

    // -------------------------------------------------------------- family
    auto* family = app.add_subcommand("family", "emit a family polynomial as JSON");
    std::string f_kind;
    int f_n = 0, f_m = 0, f_nn = 0;
    std::string f_alpha = "0", f_beta = "0", f_gamma = "0", f_output;
    family->add_option("--kind", f_kind, "family kind (e.g. hermite2, laguerre2)")->required();
    family->add_option("--n", f_n, "degree");
    family->add_option("--m", f_m, "lacunary/complete order (>= 2)");
    family->add_option("--N", f_nn, "truncation order (bessel_c0)");
    family->add_option("--alpha", f_alpha, "rational p/q (shifted_hermite3)");
    family->add_option("--beta", f_beta, "rational p/q (shifted_hermite3)");
    family->add_option("--gamma", f_gamma, "rational p/q (shifted_hermite3)");
    family->add_option("--output", f_output, "write to file instead of standard output");

    // ------------------------------------------------------------ solution
    auto* solution = app.add_subcommand("solution", "emit a rational solution as JSON");
    SolutionChoice s_sol;
    std::string s_output;
    add_solution_flags(solution, s_sol);
    solution->add_option("--output", s_output, "write to file instead of standard output");

    // -------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "verify one equation/solution pair exactly");
    std::string v_equation, v_output;
    int v_n = 0, v_m = 2, v_k = 2, v_caps_n = 8;
    std::string v_alpha = "1", v_beta = "1", v_gamma = "1";
    bool v_perturb = false;
    verify->add_option("equation", v_equation, "equation id")->required();
    verify->add_option("--n", v_n, "degree");
    verify->add_option("--m", v_m, "order (burgers, hierarchical, heat, genfun)");
    verify->add_option("--k", v_k, "hierarchy index (hierarchical)");
    verify->add_option("--N", v_caps_n, "series truncation (genfun)");
    verify->add_option("--alpha", v_alpha, "rational p/q (combined equations)");
    verify->add_option("--beta", v_beta, "rational p/q (combined equations)");
    verify->add_option("--gamma", v_gamma, "rational p/q (combined equations)");
    verify->add_flag("--perturb", v_perturb, "break the candidate first (negative control)");
    verify->add_option("--output", v_output, "write the JSON report to a file");

    // ---------------------------------------------------------------- grid
    auto* grid_cmd = app.add_subcommand("grid", "sample a solution onto a CSV grid");
    SolutionChoice g_sol;
    std::string g_x = "-5:5:400", g_y, g_t, g_output;
    bool g_fig1 = false, g_fig2 = false, g_fig3 = false;
    add_solution_flags(grid_cmd, g_sol);
    grid_cmd->add_option("--x", g_x, "x axis as min:max:steps (steps+1 nodes)");
    grid_cmd->add_option("--y", g_y, "fixed y value, or min:max:steps for a surface grid");
    grid_cmd->add_option("--t", g_t, "fixed t value for Laguerre solutions (default 1)");
    grid_cmd->add_flag("--fig1", g_fig1, "emit the 12 fixed-y comparison grids");
    grid_cmd->add_flag("--fig2", g_fig2, "emit the 4 surface grids");
    grid_cmd->add_flag("--fig3", g_fig3, "emit the 2 Laguerre solution grids");
    grid_cmd->add_option("--output", g_output, "output file (or directory for presets)");

    // ------------------------------------------------------------ identity
    auto* identity = app.add_subcommand("identity", "verify the closure identity for degree n");
    int i_n = 3;
    std::string i_output;
    identity->add_option("--n", i_n, "degree (>= 3)")->required();
    identity->add_option("--output", i_output, "write the JSON report to a file");

    // -------------------------------------------------------------- report
    auto* report = app.add_subcommand("report", "run a verification suite");
    std::string r_suite, r_output;
    bool r_json = false;
    report->add_option("suite", r_suite, "paper-fixtures | residual-sweep | fd-crosscheck")
        ->required();
    report->add_flag("--json", r_json, "machine-readable JSON report");
    report->add_option("--output", r_output, "write the report to a file");

    try {
        app.parse(argc, argv);

        if (family->parsed()) {
            hc::FamilySpec spec;
            spec.kind = canonical_kind(f_kind);
            spec.n = f_n;
            spec.m = f_m;
            spec.N = f_nn;
            spec.alpha = hc::Rational::from_string(f_alpha);
            spec.beta = hc::Rational::from_string(f_beta);
            spec.gamma = hc::Rational::from_string(f_gamma);
            hc::MultiPoly p = hc::build_family(spec);
            write_text(hc::multipoly_to_json(p).dump(2) + "\n", f_output);
            return 0;
        }

        if (solution->parsed()) {
            if (s_sol.selected_count() != 1)
                throw std::invalid_argument(
                    "pick exactly one of --phi, --laguerre, --hybrid, --combined");
            hc::RationalFn u = hc::normalize_content(s_sol.build());
            write_text(hc::rationalfn_to_json(u).dump(2) + "\n", s_output);
            return 0;
        }

        if (verify->parsed()) {
            if (!hc::is_known_equation(v_equation))
                throw std::invalid_argument("unknown equation '" + v_equation + "'");
            hc::EquationParams params;
            params.n = v_n;
            params.m = v_m;
            params.k = v_k;
            params.N = v_caps_n;
            params.alpha = hc::Rational::from_string(v_alpha);
            params.beta = hc::Rational::from_string(v_beta);
            params.gamma = hc::Rational::from_string(v_gamma);
            params.perturb = v_perturb;
            hc::VerifyReport rep = hc::run_verification(v_equation, params);
            write_text(rep.to_json().dump(2) + "\n", v_output);
            return rep.residual_zero ? 0 : 1;
        }

        if (grid_cmd->parsed()) {
            int figs = (g_fig1 ? 1 : 0) + (g_fig2 ? 1 : 0) + (g_fig3 ? 1 : 0);
            if (figs > 1) throw std::invalid_argument("pick at most one figure preset");
            if (g_fig1) return run_fig_presets(1, g_output);
            if (g_fig2) return run_fig_presets(2, g_output);
            if (g_fig3) return run_fig_presets(3, g_output);

            if (g_sol.selected_count() != 1)
                throw std::invalid_argument(
                    "pick exactly one of --phi, --laguerre, --hybrid, --combined (or a preset)");
            hc::RationalFn u = g_sol.build();
            hc::GridSpec grid;
            grid.axis = parse_axis("x", g_x);
            if (g_sol.laguerre) {
                if (!g_y.empty())
                    throw std::invalid_argument("Laguerre solutions live on (x,t); use --t");
                grid.fixed["t"] = g_t.empty() ? 1.0 : std::stod(g_t);
            } else {
                if (!g_t.empty())
                    throw std::invalid_argument("--t applies only to --laguerre grids");
                if (!g_y.empty() && looks_like_range(g_y))
                    grid.second_axis = parse_axis("y", g_y);
                else
                    grid.fixed["y"] = g_y.empty() ? 1.0 : std::stod(g_y);
            }
            return emit_grid_csv(u, grid, g_output);
        }

        if (identity->parsed()) {
            hc::EquationParams params;
            params.n = i_n;
            hc::VerifyReport rep = hc::run_verification("identity", params);
            write_text(rep.to_json().dump(2) + "\n", i_output);
            return rep.residual_zero ? 0 : 1;
        }

        if (report->parsed()) {
            if (r_suite == "paper-fixtures")
                return print_suite(hc::paper_fixtures_suite(), r_json, r_output);
            if (r_suite == "residual-sweep")
                return print_suite(hc::residual_sweep_suite(), r_json, r_output);
            if (r_suite == "fd-crosscheck")
                return print_suite(hc::fd_crosscheck_suite(), r_json, r_output);
            throw std::invalid_argument("unknown suite '" + r_suite + "'");
        }

        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
