#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "growthlab/polynomial.hpp"
#include "growthlab/rational.hpp"

namespace growthlab {

// First-order rational recurrence y_{n+1} = R(n, y_n) with
// R(n, y) = P(n, y) / Q(n, y).  Each power of y carries a polynomial in the
// index n with exact rational coefficients, so the map may be non-autonomous.
//
// Invariants enforced at construction:
//   * Q is not identically zero;
//   * P and Q are coprime as polynomials in y over the rational-function
//     field in n, certified by finding one index specialization with a
//     constant gcd (checked over ten consecutive indices starting at the
//     default start index).
class DiscreteEquation {
  public:
    // coeffs[i] is the polynomial in n multiplying y^i.
    DiscreteEquation(std::vector<Polynomial> num_coeffs,
                     std::vector<Polynomial> den_coeffs,
                     long start_index = 0);

    // Input format: {"num": [[...], ...], "den": [[...], ...], "n0": int}
    // where each inner array lists the n-polynomial coefficients for one
    // power of y, constant term first, as "p/q" strings or plain integers.
    static DiscreteEquation from_json(const std::string& text);
    std::string to_json() const;

    // R(n, y) with the index plugged in, reduced to lowest terms.
    // Throws degeneracy_error when Q(n, .) vanishes identically at n.
    RationalFunction specialize(long n) const;

    // Degree of the map in y: max of the y-degrees of P and Q.
    int deg_y() const { return deg_; }

    // Largest height among the specialized coefficient values of P and Q
    // at index n (zero coefficients contribute height 0).
    double max_coeff_height(long n) const;

    // Additive constant C(n) in the per-step height bound
    //   h(y_{n+1}) <= deg_y * h(y_n) + C(n),
    // namely log(#monomials) + max coefficient height + log lcm of
    // coefficient denominators, all at index n.
    double step_constant(long n) const;

    const std::vector<Polynomial>& num_coeffs() const { return num_; }
    const std::vector<Polynomial>& den_coeffs() const { return den_; }
    long start_index() const { return n0_; }

  private:
    std::vector<Polynomial> num_, den_;  // index = power of y
    long n0_ = 0;
    int deg_ = 0;
};

enum class OrbitTermination { completed, pole_hit, bit_budget_exceeded };

// An exact orbit together with its height statistics.
//   heights[k]    = h(y_k)                       (Weil logarithmic height)
//   cumulative[k] = sum_{j=1}^{k} heights[j]     (so cumulative[0] = 0)
// When termination != completed, stop_index is the absolute index of the
// first value that could not be produced/stored.
struct Orbit {
    long n0 = 0;
    std::vector<ExactRational> values;
    std::vector<double> heights;
    std::vector<double> cumulative;
    OrbitTermination termination = OrbitTermination::completed;
    long stop_index = 0;

    std::size_t size() const { return values.size(); }
};

struct MalmquistReport {
    int deg = 0;
    bool slow_growth = false;
    double limsup_estimate = 0.0;
    double nu = 1.0;
    std::vector<double> admissible_ratios;
    bool consistent = true;
    bool degenerate = false;
};

// Iterate the recurrence exactly over the rationals.
//   * steps >= 1, bit_budget >= 64 (std::invalid_argument otherwise);
//   * stops with pole_hit when Q(n, y_n) = 0;
//   * stops with bit_budget_exceeded when a freshly computed value needs
//     more than bit_budget bits in numerator or denominator (the value is
//     not stored);
//   * throws degeneracy_error when Q vanishes identically at some index.
// The per-step height bound h(y_{n+1}) <= deg_y*h(y_n) + C(n) is checked on
// every step and a violation raises std::logic_error.
Orbit iterate_orbit(const DiscreteEquation& eq, const ExactRational& y0,
                    long n0, long steps,
                    std::uint64_t bit_budget = 1000000);

// Recompute (heights, cumulative) from the stored values.
std::pair<std::vector<double>, std::vector<double>>
height_sequence(const Orbit& orbit);

// Per-index ratio max_coeff_height(n) / h(y_n); entries with h(y_n) = 0 are
// NaN (undefined).  Requires at least two orbit values.
std::vector<double> admissibility_report(const DiscreteEquation& eq,
                                         const Orbit& orbit);

// Number of leading points excluded from windowed estimates.
std::size_t orbit_warmup(std::size_t stored);

// Slow-growth classifier.  Computes rho_k = log(T_k) * (log k)^(2+nu) / k
// over the trailing half of the post-warm-up window and reports
// slow_growth = (max rho < tau).  Requires nu > 0 and either a completed
// orbit with >= 4 usable points or >= 16 usable points otherwise;
// insufficient_data_error when the orbit is too short.  When every height
// vanishes the report is marked degenerate and the growth test is skipped.
MalmquistReport malmquist_classify(const DiscreteEquation& eq,
                                   const Orbit& orbit, double nu = 1.0,
                                   double tau = 10.0);

// Least-squares slope of log h(y_k) against k over the trailing half of the
// orbit; estimates lim log h(y_k)/k.  Requires at least eight points with
// positive height (insufficient_data_error otherwise).
double height_entropy(const Orbit& orbit);

// Built-in equation registry.
struct EquationSpec {
    std::string name;
    std::string summary;
    DiscreteEquation equation;
    ExactRational default_y0;
};

const std::vector<EquationSpec>& builtin_equations();

// Looks up a built-in by name; throws std::domain_error listing the known
// names when absent.
const EquationSpec& find_equation(const std::string& name);

}  // namespace growthlab
