#pragma once

#include <string>
#include <utility>
#include <vector>

namespace growthlab {

// Weight function h used by the growth lemmas.  Either the preset
// h(r) = (log r)^(1+eps), valid from max(r0, e) so that h >= 1 there (which
// keeps r*h(r) inside the domain), or a user table interpolated linearly.
class WeightFn {
  public:
    static WeightFn log_power(double eps = 0.1, double r0 = 16.0);
    // r strictly increasing, h positive and non-decreasing.
    static WeightFn table(std::vector<double> r, std::vector<double> h);

    // Throws std::domain_error naming the required threshold when r is
    // below the valid range (or outside the table).
    double operator()(double r) const;
    double floor_r() const { return floor_; }
    std::string describe() const;

    // Truncated integral of dt/(t*h(t)) over [floor, R]; the lemma
    // hypothesis needs the full integral to converge, which finite data
    // cannot certify, so the companion flag only reports whether the last
    // decade still contributes a large share.
    double decay_integral(double R) const;
    bool slow_decay(double R) const;

  private:
    WeightFn() = default;
    bool preset_ = true;
    double eps_ = 0.1;
    double floor_ = 16.0;
    std::vector<double> tr_, th_;
};

// Sampled growth data: a strictly increasing grid (radii, or consecutive
// integer indices for discrete profiles) with log T stored at each point.
// T itself can exceed double range for the synthetic profiles, so all
// interpolation and increment arithmetic happens in the log domain.
class GrowthProfile {
  public:
    enum class Kind { continuous_sampled, discrete };

    static GrowthProfile continuous_from_samples(std::vector<double> r,
                                                 std::vector<double> T,
                                                 WeightFn h, double s);
    static GrowthProfile continuous_from_log(std::vector<double> r,
                                             std::vector<double> log_T,
                                             WeightFn h, double s);
    // grid is n0, n0+1, ..., n0+T.size()-1; s is a positive integer shift.
    static GrowthProfile discrete_from_samples(long n0, std::vector<double> T,
                                               WeightFn h, long s = 1);

    Kind kind() const { return kind_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& log_samples() const { return log_T_; }
    const WeightFn& weight() const { return h_; }
    double shift() const { return s_; }
    double r_min() const { return grid_.front(); }
    double r_max() const { return grid_.back(); }

    // Piecewise-linear interpolation of log T; domain_error outside the grid.
    double log_T_at(double r) const;
    // (T(r+s) - T(r)) / T(r), computed as expm1 of the log increment.
    double increment_ratio(double r) const;

  private:
    GrowthProfile() = default;
    Kind kind_ = Kind::continuous_sampled;
    std::vector<double> grid_, log_T_;
    WeightFn h_ = WeightFn::log_power();
    double s_ = 1.0;
};

// Union of closed intervals (continuous) or a sorted integer set (discrete).
struct ExceptionalSet {
    GrowthProfile::Kind kind = GrowthProfile::Kind::continuous_sampled;
    std::vector<std::pair<double, double>> intervals;
    std::vector<long> members;
};

enum class MeasureKind { logarithmic, linear, discrete_logarithmic };

// Truncated measure of the set up to R.  logarithmic: sum of log(b/a) over
// clipped intervals; linear: sum of (b-a); discrete_logarithmic: sum of 1/n
// over members <= R.  Asking for a measure that does not match the set kind
// raises std::domain_error.
double measure(const ExceptionalSet& set, MeasureKind kind, double R);

bool contains(const ExceptionalSet& set, double r);

struct GrowthParams {
    double eta = 1.0;     // threshold for the increment set
    double zeta = 0.0;    // assumed limit of the growth relation
    double C = 2.0;       // comparison constant, > 1
    double c_abs = 1.0;   // |c|, shift inside the comparison sets
    double nu = 1.0;
    double epsilon = 0.1;
    double window = 1.0 / 3.0;  // trailing fraction for windowed statistics
};

// F_eta = points where (T(r+s) - T(r))/T(r) * h(r) >= eta, merged into
// intervals for continuous profiles.  Points below the weight floor are not
// evaluable and are excluded; if no point is evaluable (for example when s
// exceeds the domain span) a std::domain_error is raised.
ExceptionalSet f_eta_set(const GrowthProfile& profile, const GrowthParams& params);

enum class RelationVerdict { consistent, assumption_violated, relation_violated };

struct RelationReport {
    std::vector<double> grid;        // evaluable points
    std::vector<double> assumption;  // A(r) = h(r) h(r h(r)) log T(r) / r
    std::vector<double> residual;    // rho(r) = increment_ratio(r) h(r) - zeta
    ExceptionalSet f_eta;
    double assumption_trailing_max = 0.0;
    double assumption_trailing_slope = 0.0;  // least squares vs log r
    double residual_trailing_max = 0.0;      // max |rho| off F_eta in window
    RelationVerdict verdict = RelationVerdict::consistent;
};

// Checks the growth relation on the trailing window:
//   * assumption_violated when A(r) is still rising (positive trailing
//     slope against log r) and its windowed max exceeds zeta + 0.5;
//   * otherwise consistent when max |rho| over off-F_eta window points is
//     at most 0.25, else relation_violated.
// Requires eta > zeta (std::invalid_argument otherwise).
RelationReport growth_relation_check(const GrowthProfile& profile,
                                     const GrowthParams& params);

// Comparison-rate presets for the shifted characteristic set.
enum class XiPreset { power, log_loglog, log_power };

// E = {r : T(r + |c| + (r+|c|)/xi(T(r+|c|))) >= C * T(r+|c|)} for the chosen
// preset xi(x) = x^eps, (log x)(log log x)^(1+eps), or (log x)^(1+eps/3).
// Points whose shifted argument leaves the sampled domain, or where xi is
// not yet positive, are not evaluable; an empty evaluable range raises
// std::domain_error.  Continuous profiles only.
ExceptionalSet borel_xi_set(const GrowthProfile& profile, XiPreset preset,
                            const GrowthParams& params);

enum class MeasureVerdict { measure_appears_bounded, measure_appears_unbounded };

struct E0Report {
    ExceptionalSet set;                // E0 = {r : T(r+|c|) >= C T(r)}
    std::vector<double> truncations;   // R values of the measure table
    std::vector<double> measures;      // linear measure of E0 up to R
    double trailing_slope = 0.0;       // measure vs log R over the window
    MeasureVerdict verdict = MeasureVerdict::measure_appears_bounded;
};

// Scans the linear measure of E0 as the truncation radius grows; the
// verdict reports whether the trailing slope against log R still rises
// (> 0.05) which is the finite-data signature of infinite linear measure.
// Continuous profiles only.
E0Report e0_linear_measure_scan(const GrowthProfile& profile,
                                const GrowthParams& params);

// Synthetic sampled profiles used by demos and tests:
//   "t-linear"     T = r            "t-ez"       T = r/pi
//   "t-exp"        log T = r        "t-sqrt-exp" log T = sqrt(r)
//   "t-log"        T = log r        "staircase"  log T ramps by 2 log 2 on
//                                                [2^k, 2^k + 1], flat after
// Unknown names raise std::domain_error listing the presets.
GrowthProfile synthetic_profile(const std::string& name,
                                const std::vector<double>& grid, WeightFn h,
                                double s);

}  // namespace growthlab
