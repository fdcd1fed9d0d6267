#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "growthlab/entropy.hpp"
#include "growthlab/equation.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/gridspec.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/nevanlinna.hpp"
#include "growthlab/rational.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Raised when a computed quantity fails its accuracy self-check; mapped to
// the dedicated numerical-failure exit code.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json json_number_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out.empty() ? "." : out);
    fs::create_directories(dir);
    return dir;
}

void emit_metadata(const fs::path& dir, const std::string& command,
                   const json& params, const json& result = json::object()) {
    json meta;
    meta["tool"] = "growthlab";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["parameters"] = params;
    if (!result.empty()) meta["result"] = result;
    write_file(dir / "metadata.json", meta.dump(2) + "\n");
}

growthlab::DiscreteEquation load_equation(const std::string& name,
                                          growthlab::ExactRational* y0,
                                          long* n0) {
    if (fs::exists(name) && fs::is_regular_file(name)) {
        std::ifstream in(name, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        auto eq = growthlab::DiscreteEquation::from_json(buf.str());
        if (y0) *y0 = growthlab::ExactRational(1);
        if (n0) *n0 = eq.start_index();
        return eq;
    }
    const growthlab::EquationSpec& spec = growthlab::find_equation(name);
    if (y0) *y0 = spec.default_y0;
    if (n0) *n0 = spec.equation.start_index();
    return spec.equation;
}

std::string orbit_csv(const growthlab::Orbit& orbit) {
    std::string csv = "n,y_n,h_n,T_n\n";
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        csv += std::to_string(orbit.n0 + static_cast<long>(k));
        csv += ',';
        csv += orbit.values[k].str();
        csv += ',';
        csv += fmt17(orbit.heights[k]);
        csv += ',';
        csv += fmt17(orbit.cumulative[k]);
        csv += '\n';
    }
    return csv;
}

const char* termination_name(growthlab::OrbitTermination t) {
    switch (t) {
        case growthlab::OrbitTermination::completed: return "completed";
        case growthlab::OrbitTermination::pole_hit: return "pole_hit";
        default: return "bit_budget_exceeded";
    }
}

json set_to_json(const growthlab::ExceptionalSet& set) {
    json out;
    if (set.kind == growthlab::GrowthProfile::Kind::discrete) {
        out["members"] = set.members;
    } else {
        json iv = json::array();
        for (const auto& [a, b] : set.intervals) iv.push_back({a, b});
        out["intervals"] = iv;
    }
    return out;
}

const char* relation_verdict_name(growthlab::RelationVerdict v) {
    switch (v) {
        case growthlab::RelationVerdict::consistent: return "consistent";
        case growthlab::RelationVerdict::assumption_violated:
            return "assumption_violated";
        default: return "relation_violated";
    }
}

const char* measure_verdict_name(growthlab::MeasureVerdict v) {
    return v == growthlab::MeasureVerdict::measure_appears_unbounded
               ? "measure_appears_unbounded"
               : "measure_appears_bounded";
}

// ----- subcommand state ----------------------------------------------------

struct CommonOpts {
    std::string out = ".";
    long seed = 0;
};

struct OrbitOpts : CommonOpts {
    std::string eq;
    std::string y0;
    long n0 = 0;
    bool n0_set = false;
    long steps = 32;
};

struct EntropyOpts : CommonOpts {
    std::string eq;
    long n0 = 0;
    bool n0_set = false;
    long J = 8;
};

struct MalmquistOpts : CommonOpts {
    std::string eq;
    std::string y0;
    long n0 = 0;
    bool n0_set = false;
    long steps = 64;
    double nu = 1.0;
};

struct GrowthOpts : CommonOpts {
    std::string profile;
    std::string in_csv;
    std::string r_grid;
    double eta = 1.0;
    double C = 2.0;
    double c = 1.0;
    double s = 1.0;
    double eps = 0.1;
    double window = 1.0 / 3.0;
};

struct NevanlinnaOpts : CommonOpts {
    std::string model;
    std::string r_grid = "10:100:geometric:16";
    double tol = 1e-8;
    double c = 0.0;
};

// ----- runners --------------------------------------------------------------

void run_orbit(const OrbitOpts& o) {
    growthlab::ExactRational y0;
    long n0 = 0;
    auto eq = load_equation(o.eq, &y0, &n0);
    if (!o.y0.empty()) y0 = growthlab::parse_rational(o.y0);
    if (o.n0_set) n0 = o.n0;

    auto orbit = growthlab::iterate_orbit(eq, y0, n0, o.steps);
    fs::path dir = prepare_out_dir(o.out);
    write_file(dir / "orbit.csv", orbit_csv(orbit));
    json params = {{"eq", o.eq},     {"y0", y0.str()},     {"n0", n0},
                   {"steps", o.steps}, {"bit_budget", 1000000},
                   {"seed", o.seed}};
    json result = {{"termination", termination_name(orbit.termination)},
                   {"stop_index", orbit.stop_index},
                   {"stored", orbit.size()}};
    emit_metadata(dir, "orbit", params, result);
}

void run_entropy(const EntropyOpts& o) {
    long n0 = 0;
    auto eq = load_equation(o.eq, nullptr, &n0);
    if (o.n0_set) n0 = o.n0;

    auto it = growthlab::symbolic_iterates(eq, n0, o.J);
    auto est = growthlab::algebraic_entropy(it.degrees);
    fs::path dir = prepare_out_dir(o.out);
    json report;
    report["n0"] = it.n0;
    report["degrees"] = it.degrees;
    report["entropy"] = est.entropy;
    report["fit_residual"] = est.fit_residual;
    report["capped_at"] =
        it.capped_at ? json(*it.capped_at) : json(nullptr);
    write_file(dir / "entropy.json", report.dump(2) + "\n");
    json params = {
        {"eq", o.eq}, {"n0", n0}, {"J", o.J}, {"seed", o.seed}};
    emit_metadata(dir, "entropy", params);
}

void run_malmquist(const MalmquistOpts& o) {
    growthlab::ExactRational y0;
    long n0 = 0;
    auto eq = load_equation(o.eq, &y0, &n0);
    if (!o.y0.empty()) y0 = growthlab::parse_rational(o.y0);
    if (o.n0_set) n0 = o.n0;

    auto orbit = growthlab::iterate_orbit(eq, y0, n0, o.steps);
    auto rep = growthlab::malmquist_classify(eq, orbit, o.nu);
    fs::path dir = prepare_out_dir(o.out);
    write_file(dir / "orbit.csv", orbit_csv(orbit));
    json ratios = json::array();
    for (double v : rep.admissible_ratios)
        ratios.push_back(json_number_or_null(v));
    json report = {{"deg", rep.deg},
                   {"slow_growth", rep.slow_growth},
                   {"limsup_estimate", rep.limsup_estimate},
                   {"nu", rep.nu},
                   {"consistent", rep.consistent},
                   {"degenerate", rep.degenerate},
                   {"admissible_ratios", ratios}};
    write_file(dir / "malmquist.json", report.dump(2) + "\n");
    json params = {{"eq", o.eq},       {"y0", y0.str()}, {"n0", n0},
                   {"steps", o.steps}, {"nu", o.nu},     {"seed", o.seed}};
    emit_metadata(dir, "malmquist", params);
}

growthlab::GrowthProfile load_csv_profile(const std::string& path,
                                          growthlab::WeightFn h, double s) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read profile " + path);
    std::vector<double> xs, ts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, t;
        if (row >> x >> t) {
            xs.push_back(x);
            ts.push_back(t);
        }
        // non-numeric lines (headers) are skipped
    }
    if (xs.size() < 2)
        throw std::invalid_argument("profile " + path +
                                    " has fewer than two numeric rows");
    bool integral_grid = true;
    for (std::size_t i = 0; i < xs.size() && integral_grid; ++i) {
        if (std::fabs(xs[i] - std::round(xs[i])) > 1e-9) integral_grid = false;
        if (i > 0 && std::fabs(xs[i] - xs[i - 1] - 1.0) > 1e-9)
            integral_grid = false;
    }
    if (integral_grid) {
        long s_int = std::lround(s);
        if (std::fabs(s - static_cast<double>(s_int)) > 1e-9)
            throw std::invalid_argument(
                "discrete profiles need an integer shift");
        return growthlab::GrowthProfile::discrete_from_samples(
            std::lround(xs.front()), ts, std::move(h), s_int);
    }
    return growthlab::GrowthProfile::continuous_from_samples(xs, ts,
                                                             std::move(h), s);
}

void run_growth(const GrowthOpts& o) {
    if (o.profile.empty() == o.in_csv.empty())
        throw std::invalid_argument(
            "growth needs exactly one of --profile or --in");
    growthlab::WeightFn h = growthlab::WeightFn::log_power(o.eps, 16.0);
    growthlab::GrowthProfile profile =
        !o.profile.empty()
            ? growthlab::synthetic_profile(
                  o.profile, growthlab::GridSpec::parse(o.r_grid).points(), h,
                  o.s)
            : load_csv_profile(o.in_csv, h, o.s);

    growthlab::GrowthParams params;
    params.eta = o.eta;
    params.C = o.C;
    params.c_abs = o.c;
    params.epsilon = o.eps;
    params.window = o.window;

    json report;
    report["kind"] = profile.kind() == growthlab::GrowthProfile::Kind::discrete
                         ? "discrete"
                         : "continuous";
    auto f = growthlab::f_eta_set(profile, params);
    report["f_eta"] = set_to_json(f);

    auto rel = growthlab::growth_relation_check(profile, params);
    report["relation"] = {
        {"verdict", relation_verdict_name(rel.verdict)},
        {"assumption_trailing_max", rel.assumption_trailing_max},
        {"assumption_trailing_slope", rel.assumption_trailing_slope},
        {"residual_trailing_max", rel.residual_trailing_max}};

    if (profile.kind() == growthlab::GrowthProfile::Kind::continuous_sampled) {
        auto e0 = growthlab::e0_linear_measure_scan(profile, params);
        report["e0"] = {{"verdict", measure_verdict_name(e0.verdict)},
                        {"trailing_slope", e0.trailing_slope},
                        {"final_measure", e0.measures.back()},
                        {"set", set_to_json(e0.set)}};
        json borel;
        const std::pair<const char*, growthlab::XiPreset> presets[] = {
            {"power", growthlab::XiPreset::power},
            {"log-loglog", growthlab::XiPreset::log_loglog},
            {"log-power", growthlab::XiPreset::log_power}};
        for (const auto& [name, preset] : presets) {
            try {
                borel[name] =
                    set_to_json(growthlab::borel_xi_set(profile, preset, params));
            } catch (const std::domain_error& e) {
                borel[name] = {{"error", e.what()}};
            }
        }
        report["borel"] = borel;
    }

    fs::path dir = prepare_out_dir(o.out);
    std::string csv = "r,log_T\n";
    for (std::size_t i = 0; i < profile.grid().size(); ++i) {
        csv += fmt17(profile.grid()[i]);
        csv += ',';
        csv += fmt17(profile.log_samples()[i]);
        csv += '\n';
    }
    write_file(dir / "profile.csv", csv);
    write_file(dir / "growth.json", report.dump(2) + "\n");
    json meta_params = {{"profile", o.profile},
                        {"in", o.in_csv},
                        {"r_grid", o.r_grid},
                        {"eta", o.eta},
                        {"C", o.C},
                        {"c", o.c},
                        {"s", o.s},
                        {"eps", o.eps},
                        {"window", o.window},
                        {"weight", h.describe()},
                        {"seed", o.seed}};
    emit_metadata(dir, "growth", meta_params);
}

void run_nevanlinna(const NevanlinnaOpts& o) {
    const growthlab::MeromorphicModel& model = growthlab::find_model(o.model);
    auto grid = growthlab::GridSpec::parse(o.r_grid).points();

    bool with_dq = o.c != 0.0;
    std::string csv = with_dq ? "r,m,N,T,dq,dq_ratio\n" : "r,m,N,T\n";
    for (double r : grid) {
        double m = growthlab::proximity(model, r, o.tol);
        double N = growthlab::counting_poles(model, r);
        double T = m + N;

        double gap = growthlab::jensen_gap(model, r, o.tol);
        double budget = 10.0 * o.tol * std::max(1.0, std::fabs(T));
        if (!(gap <= budget)) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "Jensen self-check failed at r = %.17g: gap %.3e "
                          "exceeds budget %.3e",
                          r, gap, budget);
            throw accuracy_error(msg);
        }

        csv += fmt17(r);
        csv += ',';
        csv += fmt17(m);
        csv += ',';
        csv += fmt17(N);
        csv += ',';
        csv += fmt17(T);
        if (with_dq) {
            double dq = growthlab::dq_proximity(model, o.c, r, o.tol);
            double ratio = growthlab::dq_decay_ratio(model, o.c, r, o.tol);
            csv += ',';
            csv += fmt17(dq);
            csv += ',';
            csv += fmt17(ratio);
        }
        csv += '\n';
    }

    fs::path dir = prepare_out_dir(o.out);
    write_file(dir / "nevanlinna.csv", csv);
    json params = {{"model", o.model},
                   {"r_grid", o.r_grid},
                   {"tol", o.tol},
                   {"c", o.c},
                   {"quadrature",
                    {{"base_panels", 32}, {"forced_depth", 5},
                     {"self_check", "jensen gap <= 10 * tol * max(1, |T|)"}}},
                   {"seed", o.seed}};
    emit_metadata(dir, "nevanlinna", params);
}

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--out", o.out, "output directory for artifacts");
    sub->add_option("--seed", o.seed,
                    "seed echoed into metadata for reproducibility");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "growthlab: height growth of exact orbits, algebraic entropy, "
        "exceptional growth sets, and value-distribution sweeps"};
    app.require_subcommand(1);

    OrbitOpts orbit_opts;
    auto* orbit_cmd = app.add_subcommand(
        "orbit", "iterate a rational recurrence exactly and log heights");
    orbit_cmd->add_option("--eq", orbit_opts.eq,
                          "equation registry name or JSON file")
        ->required();
    orbit_cmd->add_option("--y0", orbit_opts.y0, "initial value p/q");
    orbit_cmd->add_option("--n0", orbit_opts.n0, "start index override");
    orbit_cmd->add_option("--steps", orbit_opts.steps, "iteration count");
    add_common(orbit_cmd, orbit_opts);

    EntropyOpts entropy_opts;
    auto* entropy_cmd = app.add_subcommand(
        "entropy", "symbolic iterate degrees and algebraic entropy");
    entropy_cmd->add_option("--eq", entropy_opts.eq,
                            "equation registry name or JSON file")
        ->required();
    entropy_cmd->add_option("--n0", entropy_opts.n0, "start index override");
    entropy_cmd->add_option("--J", entropy_opts.J, "number of iterates");
    add_common(entropy_cmd, entropy_opts);

    MalmquistOpts malmquist_opts;
    auto* malmquist_cmd = app.add_subcommand(
        "malmquist", "height-growth classification of an exact orbit");
    malmquist_cmd->add_option("--eq", malmquist_opts.eq,
                              "equation registry name or JSON file")
        ->required();
    malmquist_cmd->add_option("--y0", malmquist_opts.y0, "initial value p/q");
    malmquist_cmd->add_option("--n0", malmquist_opts.n0,
                              "start index override");
    malmquist_cmd->add_option("--steps", malmquist_opts.steps,
                              "iteration count");
    malmquist_cmd->add_option("--nu", malmquist_opts.nu,
                              "exponent in the growth weight (> 0)");
    add_common(malmquist_cmd, malmquist_opts);

    GrowthOpts growth_opts;
    auto* growth_cmd = app.add_subcommand(
        "growth", "exceptional set extraction on a growth profile");
    growth_cmd->add_option("--profile", growth_opts.profile,
                           "synthetic profile name");
    growth_cmd->add_option("--in", growth_opts.in_csv,
                           "CSV profile file with rows r,T (or n,T_n)");
    growth_cmd->add_option("--r-grid", growth_opts.r_grid,
                           "grid spec lo:hi:kind:count for synthetic profiles");
    growth_cmd->add_option("--eta", growth_opts.eta, "increment threshold");
    growth_cmd->add_option("--C", growth_opts.C, "comparison constant (> 1)");
    growth_cmd->add_option("--c", growth_opts.c, "shift |c| in comparison sets");
    growth_cmd->add_option("--s", growth_opts.s, "increment shift s");
    growth_cmd->add_option("--eps", growth_opts.eps,
                           "epsilon of the weight and xi presets");
    growth_cmd->add_option("--window", growth_opts.window,
                           "trailing window fraction");
    add_common(growth_cmd, growth_opts);

    NevanlinnaOpts nevanlinna_opts;
    auto* nevanlinna_cmd = app.add_subcommand(
        "nevanlinna", "characteristic sweep of a built-in model");
    nevanlinna_cmd->add_option("--model", nevanlinna_opts.model,
                               "model registry name")
        ->required();
    nevanlinna_cmd->add_option("--r-grid", nevanlinna_opts.r_grid,
                               "grid spec lo:hi:kind:count");
    nevanlinna_cmd->add_option("--tol", nevanlinna_opts.tol,
                               "relative quadrature tolerance");
    nevanlinna_cmd->add_option(
        "--c", nevanlinna_opts.c,
        "difference-quotient shift; adds dq columns when nonzero");
    add_common(nevanlinna_cmd, nevanlinna_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (orbit_cmd->parsed()) {
            orbit_opts.n0_set = orbit_cmd->count("--n0") > 0;
            run_orbit(orbit_opts);
        } else if (entropy_cmd->parsed()) {
            entropy_opts.n0_set = entropy_cmd->count("--n0") > 0;
            run_entropy(entropy_opts);
        } else if (malmquist_cmd->parsed()) {
            malmquist_opts.n0_set = malmquist_cmd->count("--n0") > 0;
            run_malmquist(malmquist_opts);
        } else if (growth_cmd->parsed()) {
            run_growth(growth_opts);
        } else if (nevanlinna_cmd->parsed()) {
            run_nevanlinna(nevanlinna_opts);
        }
        return 0;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return 3;
    } catch (const growthlab::degeneracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const growthlab::insufficient_data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
