#include "growthlab/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "growthlab/errors.hpp"

namespace growthlab {

SymbolicIterates symbolic_iterates(const DiscreteEquation& eq, long n0, long J,
                                   long max_degree) {
    if (J < 1) throw std::invalid_argument("symbolic_iterates: J must be >= 1");
    if (max_degree < 1)
        throw std::invalid_argument("symbolic_iterates: max_degree must be >= 1");

    SymbolicIterates out;
    out.n0 = n0;
    out.iterates.push_back(RationalFunction::identity());
    out.degrees.push_back(1);

    for (long j = 0; j < J; ++j) {
        RationalFunction step = eq.specialize(n0 + j);
        RationalFunction next;
        try {
            next = substitute(step, out.iterates.back());
        } catch (const degeneracy_error&) {
            throw degeneracy_error(
                "symbolic_iterates: composition collapses onto a pole at iterate " +
                std::to_string(j + 1));
        }
        long d = degree(next);
        if (d > max_degree) {
            out.capped_at = j + 1;
            break;
        }
        if (d > static_cast<long>(eq.deg_y()) * out.degrees.back())
            throw std::logic_error(
                "symbolic_iterates: degree exceeded the composition bound");
        out.iterates.push_back(std::move(next));
        out.degrees.push_back(d);
    }
    return out;
}

EntropyEstimate algebraic_entropy(const std::vector<long>& degrees) {
    if (degrees.size() < 4)
        throw insufficient_data_error(
            "algebraic_entropy: need at least four degrees");

    std::size_t first = degrees.size() / 2;
    bool constant = true;
    for (std::size_t j = first + 1; j < degrees.size(); ++j)
        if (degrees[j] != degrees[first]) { constant = false; break; }
    if (constant) return {0.0, 0.0};

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (std::size_t j = first; j < degrees.size(); ++j) {
        if (degrees[j] <= 0) continue;  // constant iterate; no growth signal
        double x = static_cast<double>(j);
        double y = std::log(static_cast<double>(degrees[j]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m < 2)
        throw insufficient_data_error(
            "algebraic_entropy: trailing window has fewer than two positive degrees");

    double denom = m * sxx - sx * sx;
    double slope = (m * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / m;
    double rss = 0.0;
    for (std::size_t j = first; j < degrees.size(); ++j) {
        if (degrees[j] <= 0) continue;
        double y = std::log(static_cast<double>(degrees[j]));
        double e = y - (slope * static_cast<double>(j) + intercept);
        rss += e * e;
    }
    return {slope, std::sqrt(rss / static_cast<double>(m))};
}

}  // namespace growthlab
