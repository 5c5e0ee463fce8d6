// Command-line frontend: every library operation behind one binary with
// machine-readable (json / csv) output.
//
// Exit codes: 0 success, 2 invalid input, 3 internal consistency violation,
// 4 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctpoly/chaos_sim.hpp"
#include "ctpoly/deflation.hpp"
#include "ctpoly/errors.hpp"
#include "ctpoly/extremal.hpp"
#include "ctpoly/rootfind.hpp"
#include "ctpoly/schur.hpp"
#include "ctpoly/tolerances.hpp"
#include "ctpoly/trigpoly.hpp"
#include "ctpoly/version.hpp"

using nlohmann::json;

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json tolerance_ledger() {
    json t = json::object();
    for (const auto& [name, value] : ctpoly::tol::ledger) {
        t[std::string(name)] = value;
    }
    return t;
}

void emit_json(const std::string& command, const json& inputs,
               const json& results) {
    json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["results"] = results;
    envelope["tolerances"] = tolerance_ledger();
    envelope["version"] = ctpoly::kVersion;
    std::cout << envelope.dump(2) << "\n";
}

struct CsvTable {
    std::vector<std::string> comments; // emitted as "# key = value"
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void comment(const std::string& key, const std::string& value) {
        comments.push_back(key + " = " + value);
    }
    void comment(const std::string& key, double value) {
        comment(key, fmt17(value));
    }
    void emit() const {
        for (const auto& c : comments) std::cout << "# " << c << "\n";
        for (std::size_t i = 0; i < header.size(); ++i) {
            std::cout << (i ? "," : "") << header[i];
        }
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::cout << (i ? "," : "") << row[i];
            }
            std::cout << "\n";
        }
    }
};

std::vector<double> parse_inline_coeffs(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ctpoly::InvalidInput("cannot parse coefficient '" + item + "'");
        }
    }
    if (out.empty()) {
        throw ctpoly::InvalidInput("no coefficients given");
    }
    return out;
}

std::vector<double> read_coeffs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ctpoly::InvalidInput("cannot open coefficients file " + path);
    }
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        double x = 0.0;
        if (ss >> x) out.push_back(x);
    }
    if (out.empty()) {
        throw ctpoly::InvalidInput("coefficients file " + path + " is empty");
    }
    return out;
}

ctpoly::CoefficientVector load_coeffs(const std::string& inline_text,
                                      const std::string& file) {
    if (!inline_text.empty() && !file.empty()) {
        throw ctpoly::InvalidInput("give either --coeffs or --coeffs-file, not both");
    }
    if (!inline_text.empty()) {
        return ctpoly::CoefficientVector(parse_inline_coeffs(inline_text));
    }
    if (!file.empty()) {
        return ctpoly::CoefficientVector(read_coeffs_file(file));
    }
    throw ctpoly::InvalidInput("coefficients required (--coeffs or --coeffs-file)");
}

double theorem_value(int n) {
    const double t = std::tan(std::numbers::pi / (2.0 * (n + 1)));
    return -t * t;
}

json margins_to_json(const ctpoly::StabilityMargins& m) {
    json j;
    j["k1"] = m.k1;
    j["k2"] = m.k2;
    j["phi"] = m.phi;
    j["method"] = std::string(ctpoly::to_string(m.method));
    if (m.k1_unbounded) j["k1_unbounded"] = true;
    if (m.k2_unbounded) j["k2_unbounded"] = true;
    return j;
}

struct AngleView {
    bool degrees = false;
    double show(double radians) const {
        return degrees ? radians * kRadToDeg : radians;
    }
    const char* unit() const { return degrees ? "degrees" : "radians"; }
};

// ---- subcommand payloads ----------------------------------------------

int run_optimal(int n, const std::string& format) {
    const auto a = ctpoly::optimal_coeffs(n);
    const auto g = ctpoly::optimal_gamma(n);
    const double val = theorem_value(n);
    const double pm = ctpoly::phi_max(n);
    if (format == "csv") {
        CsvTable t;
        t.comment("command", "optimal");
        t.comment("n", std::to_string(n));
        t.comment("I", val);
        t.comment("phi_max", pm);
        t.header = {"j", "a_opt", "gamma_opt"};
        for (int j = 1; j <= n; ++j) {
            t.rows.push_back({std::to_string(j), fmt17(a.a(j)), fmt17(g.gamma(j))});
        }
        t.emit();
    } else {
        json results;
        results["a_opt"] = a.coeffs();
        results["gamma_opt"] = g.values();
        results["I"] = val;
        results["phi_max"] = pm;
        emit_json("optimal", {{"n", n}, {"format", format}}, results);
    }
    return 0;
}

int run_rho(const ctpoly::CoefficientVector& coeffs, const std::string& which,
            const std::string& format, const AngleView& angles) {
    const auto zs = ctpoly::zero_set(coeffs);
    double rho_v = 0.0, rho1_v = 0.0;
    const bool want_rho = which != "rho1";
    const bool want_rho1 = which != "rho";
    if (want_rho) rho_v = ctpoly::rho(coeffs);
    if (want_rho1) rho1_v = ctpoly::rho1(coeffs);

    if (format == "csv") {
        CsvTable t;
        t.comment("command", "rho");
        if (want_rho) t.comment("rho", rho_v);
        if (want_rho1) t.comment("rho1", rho1_v);
        t.comment("angle_unit", angles.unit());
        t.header = {"t", "sign_change", "c_value"};
        for (const auto& z : zs.zeros) {
            t.rows.push_back({fmt17(angles.show(z.t)),
                              z.sign_change ? "1" : "0", fmt17(z.c_value)});
        }
        t.emit();
    } else {
        json zeros = json::array();
        for (const auto& z : zs.zeros) {
            zeros.push_back({{"t", angles.show(z.t)},
                             {"sign_change", z.sign_change},
                             {"c_value", z.c_value}});
        }
        json results;
        if (want_rho) results["rho"] = rho_v;
        if (want_rho1) results["rho1"] = rho1_v;
        results["zeros"] = zeros;
        results["angle_unit"] = angles.unit();
        emit_json("rho",
                  {{"coeffs", coeffs.coeffs()}, {"which", which}, {"format", format}},
                  results);
    }
    return 0;
}

int run_margins(const ctpoly::CoefficientVector& coeffs,
                const std::string& method, double tol_k,
                const std::string& format) {
    std::optional<ctpoly::StabilityMargins> geo, bis;
    if (method == "geometric" || method == "both") {
        geo = ctpoly::margins_geometric(coeffs);
    }
    if (method == "bisection" || method == "both") {
        bis = ctpoly::margins_bisection(coeffs, tol_k);
    }
    std::optional<double> discrepancy;
    if (geo && bis) {
        discrepancy = std::max(std::abs(geo->k1 - bis->k1),
                               std::abs(geo->k2 - bis->k2));
    }

    if (format == "csv") {
        CsvTable t;
        t.comment("command", "margins");
        if (discrepancy) t.comment("discrepancy", *discrepancy);
        t.header = {"method", "k1", "k2", "phi"};
        for (const auto& m : {geo, bis}) {
            if (!m) continue;
            t.rows.push_back({std::string(ctpoly::to_string(m->method)),
                              fmt17(m->k1), fmt17(m->k2), fmt17(m->phi)});
        }
        t.emit();
    } else {
        json results;
        if (geo) results["geometric"] = margins_to_json(*geo);
        if (bis) results["bisection"] = margins_to_json(*bis);
        if (discrepancy) results["discrepancy"] = *discrepancy;
        emit_json("margins",
                  {{"coeffs", coeffs.coeffs()},
                   {"method", method},
                   {"tol", tol_k},
                   {"format", format}},
                  results);
    }
    return 0;
}

int run_verify(int n, int grid, int rounds, std::uint64_t seed, double slack,
               int workers, const std::string& format) {
    const auto report = ctpoly::brute_force_sup(n, grid, rounds, seed, workers);
    if (format == "csv") {
        CsvTable t;
        t.comment("command", "verify");
        std::string coeffs_str;
        for (std::size_t i = 0; i < report.best_coeffs.size(); ++i) {
            coeffs_str += (i ? "," : "") + fmt17(report.best_coeffs[i]);
        }
        t.comment("best_coeffs", coeffs_str);
        t.header = {"n", "best_value", "theorem_value", "gap", "evaluations", "seed"};
        t.rows.push_back({std::to_string(report.n), fmt17(report.best_value),
                          fmt17(report.theorem_value), fmt17(report.gap),
                          std::to_string(report.evaluations),
                          std::to_string(report.seed)});
        t.emit();
    } else {
        json results;
        results["n"] = report.n;
        results["best_value"] = report.best_value;
        results["best_coeffs"] = report.best_coeffs;
        results["theorem_value"] = report.theorem_value;
        results["gap"] = report.gap;
        results["evaluations"] = report.evaluations;
        results["seed"] = report.seed;
        emit_json("verify",
                  {{"n", n},
                   {"grid", grid},
                   {"rounds", rounds},
                   {"seed", seed},
                   {"slack", slack},
                   {"workers", workers},
                   {"format", format}},
                  results);
    }
    if (report.gap > slack) {
        std::cerr << "verify: gap " << fmt17(report.gap)
                  << " exceeds allowed slack " << fmt17(slack) << "\n";
        return 4;
    }
    return 0;
}

int run_simulate(const ctpoly::MapSpec& map,
                 const ctpoly::CoefficientVector& coeffs,
                 const std::vector<double>& x_init, int steps,
                 const std::string& trace_csv, const std::string& format,
                 const json& inputs) {
    const auto trace = ctpoly::simulate(map, coeffs, x_init, steps);
    const auto interval = ctpoly::multiplier_interval(coeffs.degree(), coeffs);

    if (!trace_csv.empty()) {
        std::ofstream out(trace_csv);
        if (!out) {
            throw ctpoly::InvalidInput("cannot open trace file " + trace_csv);
        }
        out << "step,x,error\n";
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            out << i << "," << fmt17(trace.states[i]) << ","
                << fmt17(std::abs(trace.states[i] - map.fixed_point())) << "\n";
        }
    }

    if (format == "csv") {
        CsvTable t;
        t.comment("command", "simulate");
        t.comment("map", map.kind());
        t.comment("fixed_point", map.fixed_point());
        t.comment("multiplier", map.multiplier());
        t.comment("mu_lo", interval.first);
        t.comment("mu_hi", interval.second);
        t.comment("converged", trace.converged ? "1" : "0");
        t.comment("final_error", trace.final_error);
        if (trace.diverged_at) t.comment("diverged_at", std::to_string(*trace.diverged_at));
        t.header = {"step", "x"};
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            t.rows.push_back({std::to_string(i), fmt17(trace.states[i])});
        }
        t.emit();
    } else {
        json results;
        results["map"] = {{"kind", map.kind()},
                          {"params", map.params()},
                          {"fixed_point", map.fixed_point()},
                          {"multiplier", map.multiplier()}};
        results["converged"] = trace.converged;
        results["final_error"] = trace.final_error;
        results["horizon_n"] = trace.horizon_n;
        results["coeffs"] = trace.coeffs;
        results["multiplier_interval"] = {interval.first, interval.second};
        if (trace.diverged_at) results["diverged_at"] = *trace.diverged_at;
        results["states"] = trace.states;
        emit_json("simulate", inputs, results);
    }
    return 0;
}

int run_table(int max_n, const std::string& format) {
    struct Row {
        int n;
        double a1, an, value, k2, pm;
    };
    std::vector<Row> rows;
    for (int n = 1; n <= max_n; ++n) {
        const auto a = ctpoly::optimal_coeffs(n);
        rows.push_back({n, a.a(1), a.a(n), theorem_value(n),
                        ctpoly::phi_max(n) - 1.0, ctpoly::phi_max(n)});
    }
    if (format == "csv") {
        CsvTable t;
        t.comment("command", "table");
        t.header = {"n", "a1_opt", "an_opt", "I", "k2_opt", "phi_max"};
        for (const auto& r : rows) {
            t.rows.push_back({std::to_string(r.n), fmt17(r.a1), fmt17(r.an),
                              fmt17(r.value), fmt17(r.k2), fmt17(r.pm)});
        }
        t.emit();
    } else {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({{"n", r.n},
                           {"a1_opt", r.a1},
                           {"an_opt", r.an},
                           {"I", r.value},
                           {"k2_opt", r.k2},
                           {"phi_max", r.pm}});
        }
        emit_json("table", {{"max_n", max_n}, {"format", format}}, {{"rows", out}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conditional extrema, Fejer-optimal coefficients and Schur "
                 "stability margins of conjugate trigonometric polynomials"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global options after the subcommand name

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bool degrees = false;
    app.add_flag("--degrees", degrees, "display angles in degrees");

    // optimal
    auto* cmd_optimal = app.add_subcommand("optimal", "closed-form optimal coefficients");
    int opt_n = 0;
    cmd_optimal->add_option("--n", opt_n, "degree")->required();

    // rho
    auto* cmd_rho = app.add_subcommand("rho", "conditional minima over the zero set");
    std::string rho_coeffs, rho_file, rho_which = "both";
    cmd_rho->add_option("--coeffs", rho_coeffs, "comma-separated a_1..a_n");
    cmd_rho->add_option("--coeffs-file", rho_file, "one coefficient per line, # comments");
    cmd_rho->add_option("--which", rho_which, "value selection")
        ->check(CLI::IsMember({"rho", "rho1", "both"}))
        ->capture_default_str();

    // margins
    auto* cmd_margins = app.add_subcommand("margins", "robust Schur stability margins");
    std::string mg_coeffs, mg_file, mg_method = "geometric";
    double mg_tol = 1e-9;
    cmd_margins->add_option("--coeffs", mg_coeffs, "comma-separated a_1..a_n");
    cmd_margins->add_option("--coeffs-file", mg_file, "one coefficient per line");
    cmd_margins->add_option("--method", mg_method, "computation method")
        ->check(CLI::IsMember({"geometric", "bisection", "both"}))
        ->capture_default_str();
    cmd_margins->add_option("--tol", mg_tol, "bisection tolerance")
        ->capture_default_str();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "brute-force check of the extremum value");
    int vf_n = 0, vf_grid = 2000, vf_rounds = 3, vf_workers = 1;
    std::uint64_t vf_seed = 0;
    double vf_slack = 1e-3;
    cmd_verify->add_option("--n", vf_n, "degree (1..5)")->required();
    cmd_verify->add_option("--grid", vf_grid, "grid points per free dimension")
        ->capture_default_str();
    cmd_verify->add_option("--rounds", vf_rounds, "refinement rounds")
        ->capture_default_str();
    cmd_verify->add_option("--seed", vf_seed, "search seed")->capture_default_str();
    cmd_verify->add_option("--slack", vf_slack, "largest acceptable gap")
        ->capture_default_str();
    cmd_verify->add_option("--workers", vf_workers, "grid evaluation threads")
        ->capture_default_str();

    // simulate
    auto* cmd_simulate = app.add_subcommand("simulate", "averaged control of a chaotic map");
    std::string sm_map = "logistic", sm_coeffs, sm_file, sm_poly, sm_x0, sm_trace;
    double sm_r = 3.8, sm_guess = 0.5;
    int sm_n = 0, sm_steps = 500;
    cmd_simulate->add_option("--map", sm_map, "map kind")
        ->check(CLI::IsMember({"logistic", "cubic", "custom"}))
        ->capture_default_str();
    cmd_simulate->add_option("--r", sm_r, "map parameter r")->capture_default_str();
    cmd_simulate->add_option("--poly", sm_poly, "custom map monomial coefficients c0,c1,...");
    cmd_simulate->add_option("--fixed-point-guess", sm_guess,
                             "Newton start for the custom map fixed point")
        ->capture_default_str();
    cmd_simulate->add_option("--n", sm_n, "use optimal coefficients of this degree");
    cmd_simulate->add_option("--coeffs", sm_coeffs, "explicit control coefficients");
    cmd_simulate->add_option("--coeffs-file", sm_file, "coefficients from file");
    cmd_simulate->add_option("--x0", sm_x0,
                             "initial history (single value or comma list of length n); "
                             "default: fixed point + 1e-3");
    cmd_simulate->add_option("--steps", sm_steps, "map applications")->capture_default_str();
    cmd_simulate->add_option("--trace-csv", sm_trace, "write per-step trace to this file");

    // table
    auto* cmd_table = app.add_subcommand("table", "optimal values for n = 1..max-n");
    int tb_max = 20;
    cmd_table->add_option("--max-n", tb_max, "largest degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_optimal->parsed()) {
            if (opt_n < 1) throw ctpoly::InvalidInput("--n must be >= 1");
            return run_optimal(opt_n, format);
        }
        if (cmd_rho->parsed()) {
            return run_rho(load_coeffs(rho_coeffs, rho_file), rho_which, format,
                           {degrees});
        }
        if (cmd_margins->parsed()) {
            return run_margins(load_coeffs(mg_coeffs, mg_file), mg_method, mg_tol,
                               format);
        }
        if (cmd_verify->parsed()) {
            return run_verify(vf_n, vf_grid, vf_rounds, vf_seed, vf_slack,
                              vf_workers, format);
        }
        if (cmd_simulate->parsed()) {
            std::optional<ctpoly::MapSpec> map;
            if (sm_map == "logistic") {
                map = ctpoly::MapSpec::logistic(sm_r);
            } else if (sm_map == "cubic") {
                map = ctpoly::MapSpec::cubic(sm_r);
            } else {
                if (sm_poly.empty()) {
                    throw ctpoly::InvalidInput("--map custom requires --poly");
                }
                map = ctpoly::MapSpec::custom_polynomial(
                    parse_inline_coeffs(sm_poly), sm_guess);
            }
            std::optional<ctpoly::CoefficientVector> coeffs;
            if (sm_n > 0) {
                if (!sm_coeffs.empty() || !sm_file.empty()) {
                    throw ctpoly::InvalidInput("give either --n or --coeffs, not both");
                }
                coeffs = ctpoly::optimal_coeffs(sm_n);
            } else {
                coeffs = load_coeffs(sm_coeffs, sm_file);
            }
            const int n = coeffs->degree();
            std::vector<double> x_init;
            if (sm_x0.empty()) {
                x_init.assign(static_cast<std::size_t>(n),
                              map->fixed_point() + 1e-3);
            } else {
                x_init = parse_inline_coeffs(sm_x0);
                if (x_init.size() == 1) {
                    x_init.assign(static_cast<std::size_t>(n), x_init[0]);
                }
                if (static_cast<int>(x_init.size()) != n) {
                    throw ctpoly::InvalidInput("--x0 must carry 1 or n values");
                }
            }
            json inputs = {{"map", sm_map},      {"r", sm_r},
                           {"n", n},             {"coeffs", coeffs->coeffs()},
                           {"x0", x_init},       {"steps", sm_steps},
                           {"format", format}};
            return run_simulate(*map, *coeffs, x_init, sm_steps, sm_trace,
                                format, inputs);
        }
        if (cmd_table->parsed()) {
            if (tb_max < 1) throw ctpoly::InvalidInput("--max-n must be >= 1");
            return run_table(tb_max, format);
        }
    } catch (const ctpoly::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ctpoly::ConsistencyError& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 3;
    } catch (const ctpoly::ConvergenceError& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
