#include "growthlab/quadrature.hpp"

#include <cmath>
#include <cstddef>

namespace growthlab {

namespace {

// Evaluate f at x, stepping away from the point when the value is not finite.
// The nudge is relative to the span of the interval being integrated so the
// retry stays inside it.
double eval_nudged(const std::function<double(double)>& f, double x,
                   double span) {
    double v = f(x);
    if (std::isfinite(v)) return v;
    for (double scale : {1e-13, 1e-11, 1e-9, 1e-7}) {
        double d = span * scale;
        v = f(x + d);
        if (std::isfinite(v)) return v;
        v = f(x - d);
        if (std::isfinite(v)) return v;
    }
    return 0.0;
}

struct SimpsonCtx {
    const std::function<double(double)>& f;
    double span;
};

double simpson_rec(const SimpsonCtx& ctx, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth,
                   int force) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = eval_nudged(ctx.f, lm, ctx.span);
    double frm = eval_nudged(ctx.f, rm, ctx.span);
    double h = b - a;
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    // oscillatory integrands can fool the error estimate on coarse cells, so
    // a few splits are unconditional before the estimate is trusted
    if (depth <= 0 || (force <= 0 && std::fabs(delta) <= 15.0 * tol))
        return left + right + delta / 15.0;
    return simpson_rec(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                       force - 1) +
           simpson_rec(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                       force - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    SimpsonCtx ctx{f, b - a};
    double fa = eval_nudged(f, a, ctx.span);
    double fb = eval_nudged(f, b, ctx.span);
    double fm = eval_nudged(f, 0.5 * (a + b), ctx.span);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(ctx, a, b, fa, fm, fb, whole, abs_tol, max_depth, 5);
}

double circle_mean(const std::function<double(double)>& f, double rel_tol) {
    constexpr int kPanels = 32;
    constexpr double kTwoPi = 2.0 * M_PI;

    // pilot composite Simpson pass to size the absolute tolerance
    double pilot = 0.0;
    {
        constexpr int kNodes = 512;  // even
        double h = kTwoPi / kNodes;
        double acc = eval_nudged(f, 0.0, kTwoPi) + eval_nudged(f, kTwoPi, kTwoPi);
        for (int i = 1; i < kNodes; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * eval_nudged(f, i * h, kTwoPi);
        pilot = acc * h / 3.0;
    }
    // floor the budget at the rounding noise of the pilot value: tolerances
    // below that would recurse forever without gaining accuracy
    double abs_tol = std::max(rel_tol, 1e-15) * std::max(1.0, std::fabs(pilot));

    double total = 0.0;
    double width = kTwoPi / kPanels;
    for (int p = 0; p < kPanels; ++p)
        total += adaptive_simpson(f, p * width, (p + 1) * width,
                                  abs_tol / kPanels);
    return total / kTwoPi;
}

}  // namespace growthlab
