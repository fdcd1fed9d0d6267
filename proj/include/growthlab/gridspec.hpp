#pragma once

#include <string>
#include <vector>

namespace growthlab {

// Evaluation-grid descriptor parsed from "lo:hi:kind:count" where kind is
// "linear" or "geometric".  Endpoints are always included and parameters are
// echoed back verbatim by str() for reproducible reports.
struct GridSpec {
    enum class Kind { linear, geometric };

    double lo = 0.0;
    double hi = 0.0;
    Kind kind = Kind::linear;
    long count = 0;

    // Throws std::domain_error with a usage hint on malformed text,
    // count < 2, lo >= hi, or a non-positive geometric endpoint.
    static GridSpec parse(const std::string& text);

    std::vector<double> points() const;
    std::string str() const;
};

}  // namespace growthlab
