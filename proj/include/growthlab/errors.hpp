#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

// Validation / precondition failures reuse std::domain_error throughout.

// A composition or specialization collapsed (division by the zero
// polynomial, or Q(n,.) identically zero at a specialized index).
struct degeneracy_error : std::runtime_error {
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Not enough usable data points for an asymptotic estimate.
struct insufficient_data_error : std::runtime_error {
    explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature failed to reach the requested tolerance; carries the best
// estimate obtained and the error bound actually achieved.
struct accuracy_error : std::runtime_error {
    double best_estimate;
    double error_bound;
    accuracy_error(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
};

}  // namespace growthlab
