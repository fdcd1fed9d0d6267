#include "growthlab/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "growthlab/errors.hpp"
#include "growthlab/quadrature.hpp"

namespace growthlab {

namespace {

using cplx = std::complex<double>;

void check_radius(const MeromorphicModel& f, double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("radius must be positive");
    if (r > f.max_radius)
        throw std::domain_error("model \"" + f.name +
                                "\" is only evaluable up to r = " +
                                std::to_string(f.max_radius));
}

double counting_from(const std::vector<cplx>& pts, long origin_order,
                     double r) {
    double acc = static_cast<double>(origin_order) * std::log(r);
    double cap = r * (1.0 + 1e-12);
    for (const cplx& a : pts) {
        double mod = std::abs(a);
        if (mod > 0.0 && mod <= cap) acc += std::max(0.0, std::log(r / mod));
    }
    return acc;
}

}  // namespace

double proximity(const MeromorphicModel& f, double r, double rel_tol) {
    check_radius(f, r);
    auto lm = f.log_modulus;
    return circle_mean(
        [lm, r](double theta) {
            return std::max(0.0, lm(std::polar(r, theta)));
        },
        rel_tol);
}

double counting_poles(const MeromorphicModel& f, double r) {
    check_radius(f, r);
    return counting_from(f.poles_up_to(r * (1.0 + 1e-12)),
                         f.origin_pole_order, r);
}

double counting_zeros(const MeromorphicModel& f, double r) {
    check_radius(f, r);
    return counting_from(f.zeros_up_to(r * (1.0 + 1e-12)),
                         f.origin_zero_order, r);
}

double characteristic(const MeromorphicModel& f, double r, double rel_tol) {
    return proximity(f, r, rel_tol) + counting_poles(f, r);
}

double jensen_gap(const MeromorphicModel& f, double r, double rel_tol) {
    MeromorphicModel inv = invert_model(f);
    double t = characteristic(f, r, rel_tol);
    double t_inv = characteristic(inv, r, rel_tol);
    return std::fabs(t - t_inv - f.log_leading);
}

double dq_proximity(const MeromorphicModel& f, double c, double r,
                    double rel_tol) {
    check_radius(f, r + std::fabs(c));
    auto lm = f.log_modulus;
    return circle_mean(
        [lm, c, r](double theta) {
            cplx z = std::polar(r, theta);
            return std::max(0.0, lm(z + c) - lm(z));
        },
        rel_tol);
}

double dq_decay_ratio(const MeromorphicModel& f, double c, double r,
                      double rel_tol) {
    double t = characteristic(f, r + std::fabs(c), rel_tol);
    if (!(t > 1e-12))
        throw std::domain_error(
            "dq_decay_ratio: the characteristic vanishes at this radius");
    return dq_proximity(f, c, r, rel_tol) / t;
}

double deficiency_zero(const MeromorphicModel& f,
                       const std::vector<double>& radii, double rel_tol) {
    if (radii.size() < 2)
        throw insufficient_data_error(
            "deficiency_zero needs at least two radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw std::invalid_argument("radii must increase strictly");

    std::size_t first = radii.size() / 2;
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t usable = 0;
    for (std::size_t i = first; i < radii.size(); ++i) {
        double t = characteristic(f, radii[i], rel_tol);
        if (!(t > 0.0)) continue;
        worst = std::max(worst, counting_zeros(f, radii[i]) / t);
        ++usable;
    }
    if (usable == 0)
        throw insufficient_data_error(
            "deficiency_zero: the characteristic vanished at every trailing "
            "radius");
    return std::clamp(1.0 - worst, 0.0, 1.0);
}

OrderIndicators order_indicators(const std::vector<double>& r,
                                 const std::vector<double>& log_T,
                                 double window) {
    if (r.size() != log_T.size())
        throw std::invalid_argument("order_indicators: mismatched arrays");
    if (r.size() < 4)
        throw insufficient_data_error(
            "order_indicators needs at least four samples");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1]))
            throw std::invalid_argument("radii must increase strictly");

    double frac = std::clamp(window, 0.0, 1.0);
    std::size_t w = static_cast<std::size_t>(
        std::ceil(frac * static_cast<double>(r.size())));
    w = std::min(r.size(), std::max<std::size_t>(w, 2));
    std::size_t first = r.size() - w;

    std::vector<double> q;
    std::vector<double> qh;
    for (std::size_t i = first; i < r.size(); ++i) {
        if (!(r[i] > std::exp(1.0))) continue;
        double lr = std::log(r[i]);
        q.push_back(log_T[i] / lr);
        qh.push_back(log_T[i] > 1.0 ? std::log(log_T[i]) / lr : 0.0);
    }
    if (q.size() < 2)
        throw insufficient_data_error(
            "order_indicators: fewer than two usable window samples");

    OrderIndicators oi;
    oi.order = *std::max_element(q.begin(), q.end());
    oi.lower_order = *std::min_element(q.begin(), q.end());
    oi.hyper_order = *std::max_element(qh.begin(), qh.end());
    // a ratio still climbing across the window means the data has not
    // saturated any finite order yet
    if (q.back() > 1.05 * q.front() + 1e-12) {
        oi.order = std::numeric_limits<double>::infinity();
        oi.lower_order = std::numeric_limits<double>::infinity();
    }
    return oi;
}

}  // namespace growthlab
