#include "growthlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace growthlab {

namespace {

constexpr double kEdgeTol = 1e-9;

[[noreturn]] void below_floor(double r, double floor_r) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "weight function undefined at r = %.17g; needs r >= %.17g",
                  r, floor_r);
    throw std::domain_error(buf);
}

double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
    std::size_t m = x.size();
    if (m < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
    }
    double dm = static_cast<double>(m);
    return (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
}

}  // namespace

WeightFn WeightFn::log_power(double eps, double r0) {
    if (!(eps > 0.0))
        throw std::invalid_argument("weight preset needs eps > 0");
    WeightFn h;
    h.preset_ = true;
    h.eps_ = eps;
    h.floor_ = std::max(r0, std::exp(1.0));
    return h;
}

WeightFn WeightFn::table(std::vector<double> r, std::vector<double> h) {
    if (r.size() != h.size() || r.size() < 2)
        throw std::invalid_argument("weight table needs matching arrays, >= 2 rows");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0 && !(r[i] > r[i - 1]))
            throw std::invalid_argument("weight table radii must increase strictly");
        if (!(h[i] > 0.0))
            throw std::invalid_argument("weight table values must be positive");
        if (i > 0 && h[i] < h[i - 1])
            throw std::invalid_argument("weight table must be non-decreasing");
    }
    WeightFn w;
    w.preset_ = false;
    w.floor_ = r.front();
    w.tr_ = std::move(r);
    w.th_ = std::move(h);
    return w;
}

double WeightFn::operator()(double r) const {
    if (r < floor_ * (1.0 - kEdgeTol)) below_floor(r, floor_);
    if (preset_) {
        double lr = std::log(std::max(r, floor_));
        return std::pow(lr, 1.0 + eps_);
    }
    if (r > tr_.back() * (1.0 + kEdgeTol)) below_floor(r, floor_);
    double rc = std::clamp(r, tr_.front(), tr_.back());
    auto it = std::upper_bound(tr_.begin(), tr_.end(), rc);
    std::size_t j = std::min<std::size_t>(
        tr_.size() - 1, static_cast<std::size_t>(it - tr_.begin()));
    std::size_t i = j - 1;
    double t = (rc - tr_[i]) / (tr_[j] - tr_[i]);
    return th_[i] + t * (th_[j] - th_[i]);
}

std::string WeightFn::describe() const {
    char buf[96];
    if (preset_) {
        std::snprintf(buf, sizeof buf, "(log r)^%.17g from r0=%.17g", 1.0 + eps_,
                      floor_);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "table[%zu] on [%.17g, %.17g]", tr_.size(),
                  tr_.front(), tr_.back());
    return buf;
}

double WeightFn::decay_integral(double R) const {
    if (R <= floor_) return 0.0;
    if (preset_) {
        // closed form of the integral of dt/(t (log t)^(1+eps))
        return (std::pow(std::log(floor_), -eps_) - std::pow(std::log(R), -eps_)) /
               eps_;
    }
    // trapezoid in u = log t of 1/h(e^u)
    double hi = std::min(R, tr_.back());
    double acc = 0.0;
    double ua = std::log(tr_.front());
    double fa = 1.0 / th_.front();
    for (std::size_t i = 1; i < tr_.size() && tr_[i - 1] < hi; ++i) {
        double rb = std::min(tr_[i], hi);
        double ub = std::log(rb);
        double fb = 1.0 / (*this)(rb);
        acc += 0.5 * (fa + fb) * (ub - ua);
        ua = ub;
        fa = fb;
    }
    return acc;
}

bool WeightFn::slow_decay(double R) const {
    double total = decay_integral(R);
    if (!(total > 0.0)) return false;
    double head = decay_integral(std::max(floor_, R / 10.0));
    return (total - head) / total > 0.25;
}

GrowthProfile GrowthProfile::continuous_from_samples(std::vector<double> r,
                                                     std::vector<double> T,
                                                     WeightFn h, double s) {
    std::vector<double> lt(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!(T[i] > 0.0))
            throw std::domain_error("growth profile needs positive T samples");
        lt[i] = std::log(T[i]);
    }
    return continuous_from_log(std::move(r), std::move(lt), std::move(h), s);
}

GrowthProfile GrowthProfile::continuous_from_log(std::vector<double> r,
                                                 std::vector<double> log_T,
                                                 WeightFn h, double s) {
    if (r.size() != log_T.size() || r.size() < 2)
        throw std::domain_error("growth profile needs matching arrays, >= 2 rows");
    if (!(s > 0.0)) throw std::domain_error("growth profile needs shift s > 0");
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (!(r[i] > r[i - 1]))
            throw std::domain_error("growth profile grid must increase strictly");
        if (log_T[i] < log_T[i - 1] - 1e-6)
            throw std::domain_error("growth profile T samples must be non-decreasing");
        // absorb sub-tolerance numerical wobble so the invariant holds exactly
        log_T[i] = std::max(log_T[i], log_T[i - 1]);
    }
    GrowthProfile p;
    p.kind_ = Kind::continuous_sampled;
    p.grid_ = std::move(r);
    p.log_T_ = std::move(log_T);
    p.h_ = std::move(h);
    p.s_ = s;
    return p;
}

GrowthProfile GrowthProfile::discrete_from_samples(long n0, std::vector<double> T,
                                                   WeightFn h, long s) {
    if (s < 1) throw std::domain_error("discrete profile needs integer shift >= 1");
    std::vector<double> grid(T.size());
    for (std::size_t i = 0; i < T.size(); ++i)
        grid[i] = static_cast<double>(n0 + static_cast<long>(i));
    std::vector<double> lt(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!(T[i] > 0.0))
            throw std::domain_error("growth profile needs positive T samples");
        lt[i] = std::log(T[i]);
    }
    GrowthProfile p =
        continuous_from_log(std::move(grid), std::move(lt), std::move(h),
                            static_cast<double>(s));
    p.kind_ = Kind::discrete;
    return p;
}

double GrowthProfile::log_T_at(double r) const {
    double tol = kEdgeTol * (1.0 + std::fabs(r));
    if (r < grid_.front() - tol || r > grid_.back() + tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "r = %.17g outside the sampled domain [%.17g, %.17g]", r,
                      grid_.front(), grid_.back());
        throw std::domain_error(buf);
    }
    double rc = std::clamp(r, grid_.front(), grid_.back());
    auto it = std::upper_bound(grid_.begin(), grid_.end(), rc);
    std::size_t j = std::min<std::size_t>(
        grid_.size() - 1, static_cast<std::size_t>(it - grid_.begin()));
    std::size_t i = j - 1;
    double t = (rc - grid_[i]) / (grid_[j] - grid_[i]);
    return log_T_[i] + t * (log_T_[j] - log_T_[i]);
}

double GrowthProfile::increment_ratio(double r) const {
    return std::expm1(log_T_at(r + s_) - log_T_at(r));
}

double measure(const ExceptionalSet& set, MeasureKind kind, double R) {
    if (set.kind == GrowthProfile::Kind::discrete) {
        if (kind != MeasureKind::discrete_logarithmic)
            throw std::domain_error(
                "discrete sets only carry the discrete logarithmic measure");
        double acc = 0.0;
        for (long n : set.members) {
            if (static_cast<double>(n) > R) break;
            if (n > 0) acc += 1.0 / static_cast<double>(n);
        }
        return acc;
    }
    if (kind == MeasureKind::discrete_logarithmic)
        throw std::domain_error(
            "continuous sets carry logarithmic or linear measure only");
    double acc = 0.0;
    for (const auto& [a, b] : set.intervals) {
        double hi = std::min(b, R);
        if (hi <= a) continue;
        if (kind == MeasureKind::logarithmic) {
            if (!(a > 0.0))
                throw std::domain_error(
                    "logarithmic measure needs intervals with positive endpoints");
            acc += std::log(hi / a);
        } else {
            acc += hi - a;
        }
    }
    return acc;
}

bool contains(const ExceptionalSet& set, double r) {
    if (set.kind == GrowthProfile::Kind::discrete) {
        long n = std::lround(r);
        return std::binary_search(set.members.begin(), set.members.end(), n);
    }
    for (const auto& [a, b] : set.intervals)
        if (r >= a && r <= b) return true;
    return false;
}

namespace {

// Grid points where both h(r) and T(r+s) are available.
std::vector<std::size_t> evaluable_points(const GrowthProfile& p) {
    std::vector<std::size_t> idx;
    const auto& g = p.grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < p.weight().floor_r() * (1.0 - kEdgeTol)) continue;
        if (g[i] + p.shift() > p.r_max() * (1.0 + kEdgeTol) + kEdgeTol) break;
        idx.push_back(i);
    }
    return idx;
}

ExceptionalSet merge_members(const GrowthProfile& p,
                             const std::vector<double>& points,
                             const std::vector<bool>& member) {
    ExceptionalSet set;
    set.kind = p.kind();
    if (p.kind() == GrowthProfile::Kind::discrete) {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (member[i]) set.members.push_back(std::lround(points[i]));
        return set;
    }
    std::size_t i = 0;
    while (i < points.size()) {
        if (!member[i]) { ++i; continue; }
        std::size_t j = i;
        while (j + 1 < points.size() && member[j + 1]) ++j;
        set.intervals.emplace_back(points[i], points[j]);
        i = j + 1;
    }
    return set;
}

std::size_t window_start(std::size_t n, double window) {
    double frac = std::clamp(window, 0.0, 1.0);
    std::size_t w = static_cast<std::size_t>(
        std::ceil(frac * static_cast<double>(n)));
    w = std::max<std::size_t>(w, 2);
    w = std::min(w, n);
    return n - w;
}

}  // namespace

ExceptionalSet f_eta_set(const GrowthProfile& profile, const GrowthParams& params) {
    auto idx = evaluable_points(profile);
    if (idx.empty())
        throw std::domain_error(
            "no evaluable points: the shift exceeds the domain span or every "
            "sample sits below the weight floor");
    std::vector<double> pts;
    std::vector<bool> member;
    pts.reserve(idx.size());
    member.reserve(idx.size());
    for (std::size_t i : idx) {
        double r = profile.grid()[i];
        pts.push_back(r);
        member.push_back(profile.increment_ratio(r) * profile.weight()(r) >=
                         params.eta);
    }
    return merge_members(profile, pts, member);
}

RelationReport growth_relation_check(const GrowthProfile& profile,
                                     const GrowthParams& params) {
    if (!(params.eta > params.zeta))
        throw std::invalid_argument("growth_relation_check needs eta > zeta");

    RelationReport rep;
    rep.f_eta = f_eta_set(profile, params);
    for (std::size_t i : evaluable_points(profile)) {
        double r = profile.grid()[i];
        double hr;
        double hrh;
        try {
            hr = profile.weight()(r);
            hrh = profile.weight()(r * hr);
        } catch (const std::domain_error&) {
            continue;  // table weight does not reach r*h(r); skip the point
        }
        rep.grid.push_back(r);
        rep.assumption.push_back(hrh * hr * profile.log_T_at(r) / r);
        rep.residual.push_back(profile.increment_ratio(r) * hr - params.zeta);
    }
    if (rep.grid.size() < 2)
        throw std::domain_error(
            "growth_relation_check: fewer than two evaluable points");

    std::size_t first = window_start(rep.grid.size(), params.window);
    std::vector<double> wx, wy;
    rep.assumption_trailing_max = -std::numeric_limits<double>::infinity();
    rep.residual_trailing_max = 0.0;
    for (std::size_t i = first; i < rep.grid.size(); ++i) {
        wx.push_back(std::log(rep.grid[i]));
        wy.push_back(rep.assumption[i]);
        rep.assumption_trailing_max =
            std::max(rep.assumption_trailing_max, rep.assumption[i]);
        if (!contains(rep.f_eta, rep.grid[i]))
            rep.residual_trailing_max =
                std::max(rep.residual_trailing_max, std::fabs(rep.residual[i]));
    }
    rep.assumption_trailing_slope = least_squares_slope(wx, wy);

    if (rep.assumption_trailing_slope > 1e-6 &&
        rep.assumption_trailing_max > params.zeta + 0.5)
        rep.verdict = RelationVerdict::assumption_violated;
    else if (rep.residual_trailing_max <= 0.25)
        rep.verdict = RelationVerdict::consistent;
    else
        rep.verdict = RelationVerdict::relation_violated;
    return rep;
}

ExceptionalSet borel_xi_set(const GrowthProfile& profile, XiPreset preset,
                            const GrowthParams& params) {
    if (profile.kind() == GrowthProfile::Kind::discrete)
        throw std::domain_error("borel_xi_set needs a continuous profile");
    if (!(params.C > 1.0))
        throw std::invalid_argument("borel_xi_set needs C > 1");
    if (!(params.c_abs >= 0.0))
        throw std::invalid_argument("borel_xi_set needs |c| >= 0");

    std::vector<double> pts;
    std::vector<bool> member;
    double logC = std::log(params.C);
    for (double r : profile.grid()) {
        double r1 = r + params.c_abs;
        if (r1 > profile.r_max() * (1.0 + kEdgeTol)) break;
        double lt1 = profile.log_T_at(r1);
        double xi;
        switch (preset) {
            case XiPreset::power:
                xi = std::exp(params.epsilon * lt1);
                break;
            case XiPreset::log_loglog:
                if (!(lt1 > 1.0)) continue;  // needs log log T > 0
                xi = lt1 * std::pow(std::log(lt1), 1.0 + params.epsilon);
                break;
            case XiPreset::log_power:
                if (!(lt1 > 0.0)) continue;
                xi = std::pow(lt1, 1.0 + params.epsilon / 3.0);
                break;
            default:
                throw std::domain_error("unknown xi preset");
        }
        if (!(xi > 0.0)) continue;
        double r2 = r1 + r1 / xi;
        if (r2 > profile.r_max() * (1.0 + kEdgeTol)) continue;
        pts.push_back(r);
        member.push_back(profile.log_T_at(r2) >= logC + lt1);
    }
    if (pts.empty())
        throw std::domain_error(
            "borel_xi_set: no evaluable points (shifted argument leaves the "
            "sampled domain everywhere)");
    return merge_members(profile, pts, member);
}

E0Report e0_linear_measure_scan(const GrowthProfile& profile,
                                const GrowthParams& params) {
    if (profile.kind() == GrowthProfile::Kind::discrete)
        throw std::domain_error("e0_linear_measure_scan needs a continuous profile");
    if (!(params.C > 1.0))
        throw std::invalid_argument("e0_linear_measure_scan needs C > 1");
    if (!(params.c_abs > 0.0))
        throw std::invalid_argument("e0_linear_measure_scan needs |c| > 0");

    std::vector<double> pts;
    std::vector<bool> member;
    double logC = std::log(params.C);
    for (double r : profile.grid()) {
        if (r + params.c_abs > profile.r_max() * (1.0 + kEdgeTol)) break;
        pts.push_back(r);
        member.push_back(profile.log_T_at(r + params.c_abs) -
                             profile.log_T_at(r) >=
                         logC);
    }
    if (pts.empty())
        throw std::domain_error(
            "e0_linear_measure_scan: |c| exceeds the sampled domain span");

    E0Report rep;
    rep.set = merge_members(profile, pts, member);
    rep.truncations = pts;
    rep.measures.reserve(pts.size());
    for (double R : pts)
        rep.measures.push_back(measure(rep.set, MeasureKind::linear, R));

    std::size_t first = window_start(pts.size(), params.window);
    std::vector<double> wx(pts.begin() + static_cast<std::ptrdiff_t>(first),
                           pts.end());
    for (auto& v : wx) v = std::log(v);
    std::vector<double> wy(rep.measures.begin() +
                               static_cast<std::ptrdiff_t>(first),
                           rep.measures.end());
    rep.trailing_slope = least_squares_slope(wx, wy);
    rep.verdict = rep.trailing_slope > 0.05
                      ? MeasureVerdict::measure_appears_unbounded
                      : MeasureVerdict::measure_appears_bounded;
    return rep;
}

GrowthProfile synthetic_profile(const std::string& name,
                                const std::vector<double>& grid, WeightFn h,
                                double s) {
    std::vector<double> lt(grid.size());
    if (name == "t-linear") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] > 0.0))
                throw std::domain_error("t-linear needs r > 0");
            lt[i] = std::log(grid[i]);
        }
    } else if (name == "t-ez") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] > 0.0)) throw std::domain_error("t-ez needs r > 0");
            lt[i] = std::log(grid[i] / M_PI);
        }
    } else if (name == "t-exp") {
        for (std::size_t i = 0; i < grid.size(); ++i) lt[i] = grid[i];
    } else if (name == "t-sqrt-exp") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] >= 0.0))
                throw std::domain_error("t-sqrt-exp needs r >= 0");
            lt[i] = std::sqrt(grid[i]);
        }
    } else if (name == "t-log") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] > 1.0)) throw std::domain_error("t-log needs r > 1");
            lt[i] = std::log(std::log(grid[i]));
        }
    } else if (name == "staircase") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double r = grid[i];
            if (!(r >= 2.0)) throw std::domain_error("staircase needs r >= 2");
            double acc = 0.0;
            for (double step = 2.0; step <= r; step *= 2.0)
                acc += std::min(std::max(r - step, 0.0), 1.0);
            lt[i] = M_LN2 + 2.0 * M_LN2 * acc;
        }
    } else {
        throw std::domain_error(
            "unknown profile \"" + name +
            "\"; presets: t-linear t-ez t-exp t-sqrt-exp t-log staircase");
    }
    return GrowthProfile::continuous_from_log(grid, std::move(lt), std::move(h), s);
}

}  // namespace growthlab
