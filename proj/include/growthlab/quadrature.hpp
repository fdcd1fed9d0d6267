#pragma once

#include <functional>

namespace growthlab {

// Adaptive Simpson quadrature of f over [a, b] with an absolute tolerance on
// the integral.  Non-finite evaluations (poles or zeros of a modulus sitting
// exactly on a sample point) are retried at slightly nudged abscissae, so
// integrable logarithmic singularities are handled without special casing.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 48);

// Mean value of f over one full turn of the circle parameter, i.e. the
// integral over [0, 2*pi) divided by 2*pi.  The tolerance is relative to the
// magnitude of the result (floored at 1): a pilot composite pass sizes the
// absolute budget, then the adaptive pass refines panel by panel.  Panel
// boundaries sit at multiples of pi/16 so that singularities of the standard
// models (real zeros and poles) land on panel edges, where the adaptive
// refinement is most effective.
double circle_mean(const std::function<double(double)>& f,
                   double rel_tol = 1e-8);

}  // namespace growthlab
