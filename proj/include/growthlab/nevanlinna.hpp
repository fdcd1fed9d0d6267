#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace growthlab {

// A concrete meromorphic function presented through the data the value
// distribution functionals actually consume: a numerically stable
// log-modulus, generators for the zeros and poles inside a disc (origin
// excluded, multiple points repeated), the orders at the origin, and the
// log-modulus of the leading Laurent coefficient there.
struct MeromorphicModel {
    std::string name;
    std::string summary;
    std::function<double(std::complex<double>)> log_modulus;
    std::function<std::vector<std::complex<double>>(double)> zeros_up_to;
    std::function<std::vector<std::complex<double>>(double)> poles_up_to;
    long origin_zero_order = 0;
    long origin_pole_order = 0;
    double log_leading = 0.0;  // log|c0| with f(z) = c0 z^m (1 + O(z))
    double max_radius = 1e200; // largest radius the log-modulus stays finite at
};

// Roots of a real-coefficient polynomial (ascending coefficients) by the
// Durand-Kerner iteration; zero roots are deflated exactly first.
std::vector<std::complex<double>> polynomial_roots(
    const std::vector<double>& coeffs);

// Models built from coefficient lists: the roots are found numerically once,
// and the log-modulus switches to a factored leading-term form far from the
// roots so it stays finite at astronomically large radii.
MeromorphicModel make_polynomial_model(std::string name,
                                       std::vector<double> coeffs);
MeromorphicModel make_rational_model(std::string name, std::vector<double> num,
                                     std::vector<double> den);

// Catalogue of ready-made models used by the command line tool and the test
// suites.  find_model throws std::domain_error listing the catalogue when the
// name is unknown.
const std::vector<MeromorphicModel>& builtin_models();
const MeromorphicModel& find_model(const std::string& name);

// g(z) = f(z + c) and g(z) = 1/f(z), with divisors and origin data remapped.
MeromorphicModel shift_model(const MeromorphicModel& f, double c);
MeromorphicModel invert_model(const MeromorphicModel& f);

// Proximity m(r, f): circle mean of log+ |f|.  Tolerances are relative to
// the magnitude of the result, floored at 1.
double proximity(const MeromorphicModel& f, double r, double rel_tol = 1e-8);

// Integrated counting functions N(r, f) (poles) and N(r, 1/f) (zeros),
// including the origin terms.  Divisor points within a relative hair of the
// boundary circle are counted as inside.
double counting_poles(const MeromorphicModel& f, double r);
double counting_zeros(const MeromorphicModel& f, double r);

// Characteristic T(r, f) = m(r, f) + N(r, f).
double characteristic(const MeromorphicModel& f, double r,
                      double rel_tol = 1e-8);

// |T(r, f) - T(r, 1/f) - log|c0||: identically zero in exact arithmetic, so
// the returned gap measures the numerical fidelity of the whole pipeline.
double jensen_gap(const MeromorphicModel& f, double r, double rel_tol = 1e-8);

// Proximity of the difference quotient, m(r, f(z+c)/f(z)).
double dq_proximity(const MeromorphicModel& f, double c, double r,
                    double rel_tol = 1e-8);

// m(r, f(z+c)/f(z)) / T(r + |c|, f): decays to zero for finite-order models.
double dq_decay_ratio(const MeromorphicModel& f, double c, double r,
                      double rel_tol = 1e-8);

// Deficiency of the value 0: 1 - limsup N(r, 1/f)/T(r, f), estimated over
// the trailing half of the given radii and clamped into [0, 1].
double deficiency_zero(const MeromorphicModel& f,
                       const std::vector<double>& radii,
                       double rel_tol = 1e-8);

// Growth indicators read off a sampled characteristic: order and lower order
// from log T / log r over the trailing window, hyper order from
// log log T / log r.  When the order ratio is still climbing at the end of
// the window the order is reported as infinity rather than a spurious finite
// number.
struct OrderIndicators {
    double order = 0.0;
    double lower_order = 0.0;
    double hyper_order = 0.0;
};
OrderIndicators order_indicators(const std::vector<double>& r,
                                 const std::vector<double>& log_T,
                                 double window = 1.0 / 3.0);

}  // namespace growthlab
