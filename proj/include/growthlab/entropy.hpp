#pragma once

#include <optional>
#include <vector>

#include "growthlab/equation.hpp"
#include "growthlab/polynomial.hpp"

namespace growthlab {

// Iterates of the map in the initial condition: iterates[j] is the j-th
// composition as a rational function of y0 with the index specialized along
// n0, n0+1, ...  degrees[j] = degree(iterates[j]) with degrees[0] = 1 for
// the identity.  When a degree would exceed the requested cap the
// computation stops and capped_at holds the index of the first iterate that
// was not computed.
struct SymbolicIterates {
    long n0 = 0;
    std::vector<RationalFunction> iterates;
    std::vector<long> degrees;
    std::optional<long> capped_at;
};

struct EntropyEstimate {
    double entropy = 0.0;
    double fit_residual = 0.0;  // RMS residual of the trailing log-degree fit
};

// Composes the specialized map J times starting from the identity.
//   * J >= 1 (std::invalid_argument otherwise);
//   * the per-step inequality degrees[j+1] <= deg_y * degrees[j] is checked
//     on every step;
//   * a composition that collapses onto a pole raises degeneracy_error
//     naming the failing iterate.
SymbolicIterates symbolic_iterates(const DiscreteEquation& eq, long n0, long J,
                                   long max_degree = 4096);

// Least-squares slope of log d_j against j over the trailing half of the
// degree sequence; an exactly constant trailing window returns exactly 0.
// Fewer than four degrees raise insufficient_data_error.
EntropyEstimate algebraic_entropy(const std::vector<long>& degrees);

}  // namespace growthlab
