#include "growthlab/equation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

// Drop all-zero high powers of y.
void trim_grid(std::vector<Polynomial>& grid) {
    while (!grid.empty() && grid.back().is_zero()) grid.pop_back();
}

// Plug the integer index into every n-polynomial of a grid, producing a
// polynomial in y.
Polynomial eval_grid(const std::vector<Polynomial>& grid, long n) {
    ExactRational x(n);
    std::vector<ExactRational> c;
    c.reserve(grid.size());
    for (const auto& p : grid) c.push_back(p.eval(x));
    return Polynomial(std::move(c));
}

double log_of_positive_integer(const mpz_class& v) {
    return log_height(ExactRational(v));
}

Polynomial poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array())
        throw std::domain_error("equation JSON: coefficient entry must be an array");
    std::vector<ExactRational> c;
    c.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string())
            c.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer())
            c.push_back(ExactRational(v.get<long>()));
        else
            throw std::domain_error(
                "equation JSON: coefficients must be \"p/q\" strings or integers");
    }
    return Polynomial(std::move(c));
}

std::vector<Polynomial> grid_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        throw std::domain_error(std::string("equation JSON: missing or empty \"") +
                                key + "\" grid");
    std::vector<Polynomial> grid;
    grid.reserve(j[key].size());
    for (const auto& row : j[key]) grid.push_back(poly_from_json(row));
    return grid;
}

nlohmann::json grid_to_json(const std::vector<Polynomial>& grid) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : grid) {
        nlohmann::json row = nlohmann::json::array();
        const auto& cs = p.coeffs();
        if (cs.empty()) row.push_back("0/1");
        for (const auto& c : cs) row.push_back(c.str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

DiscreteEquation::DiscreteEquation(std::vector<Polynomial> num_coeffs,
                                   std::vector<Polynomial> den_coeffs,
                                   long start_index)
    : num_(std::move(num_coeffs)), den_(std::move(den_coeffs)), n0_(start_index) {
    trim_grid(num_);
    trim_grid(den_);
    if (den_.empty())
        throw degeneracy_error("equation denominator is identically zero");
    deg_ = static_cast<int>(std::max(num_.size(), den_.size())) - 1;
    if (deg_ < 0) deg_ = 0;

    // Coprimality certificate: one index with a constant specialized gcd
    // proves the grids share no factor over the rational functions in n.
    bool certified = false;
    for (long n = n0_; n < n0_ + 10 && !certified; ++n) {
        Polynomial qn = eval_grid(den_, n);
        if (qn.is_zero()) continue;
        Polynomial pn = eval_grid(num_, n);
        if (pn.is_zero()) {
            if (qn.degree() == 0) certified = true;
            continue;
        }
        if (poly_gcd(pn, qn).degree() == 0) certified = true;
    }
    if (!certified)
        throw degeneracy_error(
            "equation numerator and denominator share a factor in y at every "
            "probed index; the map is not in lowest terms");
}

DiscreteEquation DiscreteEquation::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("equation JSON: ") + e.what());
    }
    long n0 = 0;
    if (j.contains("n0")) {
        if (!j["n0"].is_number_integer())
            throw std::domain_error("equation JSON: \"n0\" must be an integer");
        n0 = j["n0"].get<long>();
    }
    return DiscreteEquation(grid_from_json(j, "num"), grid_from_json(j, "den"), n0);
}

std::string DiscreteEquation::to_json() const {
    nlohmann::json j;
    j["num"] = grid_to_json(num_);
    j["den"] = grid_to_json(den_);
    j["n0"] = n0_;
    return j.dump();
}

RationalFunction DiscreteEquation::specialize(long n) const {
    Polynomial qn = eval_grid(den_, n);
    if (qn.is_zero())
        throw degeneracy_error("equation denominator vanishes identically at index " +
                               std::to_string(n));
    return normalize(eval_grid(num_, n), qn);
}

double DiscreteEquation::max_coeff_height(long n) const {
    ExactRational x(n);
    double best = 0.0;
    for (const auto* grid : {&num_, &den_})
        for (const auto& p : *grid)
            best = std::max(best, log_height(p.eval(x)));
    return best;
}

double DiscreteEquation::step_constant(long n) const {
    ExactRational x(n);
    long monomials = 0;
    double maxh = 0.0;
    mpz_class lcm_den = 1;
    for (const auto* grid : {&num_, &den_})
        for (const auto& p : *grid) {
            ExactRational v = p.eval(x);
            if (v.is_zero()) continue;
            ++monomials;
            maxh = std::max(maxh, log_height(v));
            mpz_class d = v.den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        }
    if (monomials == 0) return 0.0;
    return std::log(static_cast<double>(monomials)) + maxh +
           log_of_positive_integer(lcm_den);
}

Orbit iterate_orbit(const DiscreteEquation& eq, const ExactRational& y0,
                    long n0, long steps, std::uint64_t bit_budget) {
    if (steps < 1) throw std::invalid_argument("iterate_orbit: steps must be >= 1");
    if (bit_budget < 64)
        throw std::invalid_argument("iterate_orbit: bit_budget must be >= 64");

    Orbit orbit;
    orbit.n0 = n0;
    orbit.values.reserve(static_cast<std::size_t>(steps) + 1);
    orbit.values.push_back(y0);
    orbit.heights.push_back(log_height(y0));
    orbit.cumulative.push_back(0.0);

    ExactRational y = y0;
    for (long step = 1; step <= steps; ++step) {
        long n = n0 + step - 1;  // index of the current value
        Polynomial qn = eval_grid(eq.den_coeffs(), n);
        if (qn.is_zero())
            throw degeneracy_error(
                "equation denominator vanishes identically at index " +
                std::to_string(n));
        ExactRational qv = qn.eval(y);
        if (qv.is_zero()) {
            orbit.termination = OrbitTermination::pole_hit;
            orbit.stop_index = n + 1;
            return orbit;
        }
        Polynomial pn = eval_grid(eq.num_coeffs(), n);
        ExactRational next = pn.eval(y) / qv;
        if (next.bit_size() > bit_budget) {
            orbit.termination = OrbitTermination::bit_budget_exceeded;
            orbit.stop_index = n + 1;
            return orbit;
        }
        double h_prev = orbit.heights.back();
        double h_next = log_height(next);
        double bound = eq.deg_y() * h_prev + eq.step_constant(n);
        if (h_next > bound + 1e-9 * (1.0 + bound))
            throw std::logic_error("height bound violated during iteration");
        orbit.values.push_back(next);
        orbit.heights.push_back(h_next);
        orbit.cumulative.push_back(orbit.cumulative.back() + h_next);
        y = std::move(next);
    }
    orbit.termination = OrbitTermination::completed;
    orbit.stop_index = n0 + static_cast<long>(orbit.values.size());
    return orbit;
}

std::pair<std::vector<double>, std::vector<double>>
height_sequence(const Orbit& orbit) {
    std::vector<double> heights, cumulative;
    heights.reserve(orbit.size());
    cumulative.reserve(orbit.size());
    double total = 0.0;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        double h = log_height(orbit.values[k]);
        heights.push_back(h);
        if (k > 0) total += h;
        cumulative.push_back(total);
    }
    return {std::move(heights), std::move(cumulative)};
}

std::vector<double> admissibility_report(const DiscreteEquation& eq,
                                         const Orbit& orbit) {
    if (orbit.size() < 2)
        throw insufficient_data_error(
            "admissibility_report: need at least two orbit values");
    std::vector<double> ratios;
    ratios.reserve(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        long n = orbit.n0 + static_cast<long>(k);
        double h = orbit.heights[k];
        if (h <= 0.0)
            ratios.push_back(std::numeric_limits<double>::quiet_NaN());
        else
            ratios.push_back(eq.max_coeff_height(n) / h);
    }
    return ratios;
}

std::size_t orbit_warmup(std::size_t stored) {
    return std::max<std::size_t>(4, (stored + 7) / 8);
}

MalmquistReport malmquist_classify(const DiscreteEquation& eq,
                                   const Orbit& orbit, double nu, double tau) {
    if (!(nu > 0.0))
        throw std::invalid_argument("malmquist_classify: nu must be positive");

    MalmquistReport report;
    report.deg = eq.deg_y();
    report.nu = nu;
    report.admissible_ratios =
        orbit.size() >= 2 ? admissibility_report(eq, orbit) : std::vector<double>{};

    bool all_zero = true;
    for (double h : orbit.heights)
        if (h > 0.0) { all_zero = false; break; }
    if (all_zero) {
        report.degenerate = true;
        report.slow_growth = false;
        report.limsup_estimate = 0.0;
        report.consistent = true;
        return report;
    }

    std::size_t warm = orbit_warmup(orbit.size());
    std::size_t usable = orbit.size() > warm ? orbit.size() - warm : 0;
    bool completed = orbit.termination == OrbitTermination::completed;
    if (usable < 4 || (!completed && usable < 16))
        throw insufficient_data_error(
            "malmquist_classify: orbit too short after warm-up (" +
            std::to_string(usable) + " usable points)");

    // Trailing half of the post-warm-up window.
    std::size_t first = warm + usable / 2;
    double max_rho = -std::numeric_limits<double>::infinity();
    for (std::size_t k = std::max<std::size_t>(first, 2); k < orbit.size(); ++k) {
        double t = orbit.cumulative[k];
        if (t <= 0.0) continue;
        double kk = static_cast<double>(k);
        double rho = std::log(t) * std::pow(std::log(kk), 2.0 + nu) / kk;
        max_rho = std::max(max_rho, rho);
    }
    if (!std::isfinite(max_rho))
        throw insufficient_data_error(
            "malmquist_classify: no usable growth data in the trailing window");

    report.limsup_estimate = max_rho;
    report.slow_growth = max_rho < tau;
    report.consistent = !report.slow_growth || report.deg == 1;
    return report;
}

double height_entropy(const Orbit& orbit) {
    std::size_t positive = 0;
    for (double h : orbit.heights)
        if (h > 0.0) ++positive;
    if (positive < 8)
        throw insufficient_data_error(
            "height_entropy: need at least eight points with positive height");

    std::size_t first = orbit.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (std::size_t k = first; k < orbit.size(); ++k) {
        if (!(orbit.heights[k] > 0.0)) continue;
        double x = static_cast<double>(k);
        double y = std::log(orbit.heights[k]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m < 2)
        throw insufficient_data_error(
            "height_entropy: trailing window has fewer than two positive heights");
    double denom = m * sxx - sx * sx;
    return (m * sxy - sx * sy) / denom;
}

namespace {

std::vector<Polynomial> grid_of(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Polynomial> grid;
    grid.reserve(rows.size());
    for (const auto& row : rows) grid.push_back(Polynomial(row));
    return grid;
}

std::vector<EquationSpec> make_registry() {
    std::vector<EquationSpec> regs;
    regs.push_back({"squaring",
                    "y_{n+1} = y_n^2 (degree 2, exponential height growth)",
                    DiscreteEquation(grid_of({{0}, {0}, {1}}), grid_of({{1}}), 0),
                    ExactRational(2)});
    regs.push_back({"riccati-fib",
                    "y_{n+1} = 1/(1 + y_n) (Fibonacci ratios, degree 1)",
                    DiscreteEquation(grid_of({{1}}), grid_of({{1}, {1}}), 0),
                    ExactRational(1)});
    regs.push_back({"riccati-aut",
                    "y_{n+1} = (1 + y_n)/(2 + y_n) (autonomous Riccati)",
                    DiscreteEquation(grid_of({{1}, {1}}), grid_of({{2}, {1}}), 0),
                    ExactRational(1)});
    regs.push_back({"newton-sqrt2",
                    "y_{n+1} = (y_n^2 + 2)/(2 y_n) (Newton step for sqrt 2)",
                    DiscreteEquation(grid_of({{2}, {0}, {1}}), grid_of({{0}, {2}}), 0),
                    ExactRational(1)});
    regs.push_back({"linear-factorial",
                    "y_{n+1} = n y_n from n0 = 1 (non-autonomous linear)",
                    DiscreteEquation(grid_of({{0}, {0, 1}}), grid_of({{1}}), 1),
                    ExactRational(2)});
    regs.push_back({"linear-harmonic",
                    "y_{n+1} = (1 + n y_n)/n from n0 = 1 (harmonic drift)",
                    DiscreteEquation(grid_of({{1}, {0, 1}}), grid_of({{0, 1}}), 1),
                    ExactRational(2)});
    regs.push_back({"nonaut-quadratic",
                    "y_{n+1} = n y_n^2 from n0 = 1 (non-autonomous degree 2)",
                    DiscreteEquation(grid_of({{0}, {0}, {0, 1}}), grid_of({{1}}), 1),
                    ExactRational(2)});
    return regs;
}

}  // namespace

const std::vector<EquationSpec>& builtin_equations() {
    static const std::vector<EquationSpec> registry = make_registry();
    return registry;
}

const EquationSpec& find_equation(const std::string& name) {
    for (const auto& spec : builtin_equations())
        if (spec.name == name) return spec;
    std::ostringstream msg;
    msg << "unknown equation \"" << name << "\"; built-ins:";
    for (const auto& spec : builtin_equations()) msg << " " << spec.name;
    throw std::domain_error(msg.str());
}

}  // namespace growthlab
