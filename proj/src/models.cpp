#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "growthlab/nevanlinna.hpp"

namespace growthlab {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<cplx>& a, cplx x) {
    cplx acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) acc = acc * x + a[k];
    return acc;
}

// Shared data for coefficient-built models.
struct PolyData {
    std::vector<cplx> coeffs;               // ascending, highest nonzero kept
    std::vector<cplx> nonzero_roots;
    long origin_order = 0;
    double log_lead = 0.0;                  // log |highest coefficient|
    double root_bound = 1.0;                // Cauchy bound on root moduli

    long degree() const {
        return static_cast<long>(coeffs.size()) - 1;
    }

    double log_modulus(cplx z) const {
        double R = std::abs(z);
        if (R <= 2.0 * root_bound + 1.0)
            return std::log(std::abs(horner(coeffs, z)));
        // factored form: stable at radii where the direct value overflows
        double acc = log_lead + static_cast<double>(degree()) * std::log(R);
        for (const cplx& a : nonzero_roots) acc += std::log(std::abs(1.0 - a / z));
        return acc;
    }
};

PolyData analyze_polynomial(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty() || (c.size() == 1 && c[0] == 0.0))
        throw std::invalid_argument("model polynomial must not be zero");

    PolyData d;
    d.coeffs.assign(c.begin(), c.end());
    auto roots = polynomial_roots(c);
    for (const cplx& a : roots) {
        if (a == cplx(0.0, 0.0))
            ++d.origin_order;
        else
            d.nonzero_roots.push_back(a);
    }
    d.log_lead = std::log(std::fabs(c.back()));
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        worst = std::max(worst, std::fabs(c[k] / c.back()));
    d.root_bound = 1.0 + worst;
    return d;
}

std::string format_shift(double c) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", c);
    return buf;
}

}  // namespace

std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty() || (c.size() == 1 && c[0] == 0.0))
        throw std::invalid_argument("roots of the zero polynomial");

    std::size_t ord0 = 0;
    while (ord0 < c.size() && c[ord0] == 0.0) ++ord0;
    std::vector<cplx> roots(ord0, cplx(0.0, 0.0));
    if (c.size() - ord0 <= 1) return roots;

    std::size_t m = c.size() - 1 - ord0;
    std::vector<cplx> a(m + 1);
    for (std::size_t i = 0; i <= m; ++i) a[i] = cplx(c[ord0 + i] / c.back(), 0.0);

    std::vector<cplx> x(m);
    cplx seed(0.4, 0.9), cur(1.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        x[k] = cur;
        cur *= seed;
    }
    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            cplx den(1.0, 0.0);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) den *= x[i] - x[j];
            cplx delta = horner(a, x[i]) / den;
            x[i] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(x[i])));
        }
        if (worst < 1e-14) break;
    }
    for (cplx& r : x)
        if (std::fabs(r.imag()) <= 1e-8 * (1.0 + std::fabs(r.real())))
            r = cplx(r.real(), 0.0);
    roots.insert(roots.end(), x.begin(), x.end());
    return roots;
}

MeromorphicModel make_polynomial_model(std::string name,
                                       std::vector<double> coeffs) {
    PolyData d = analyze_polynomial(coeffs);

    MeromorphicModel f;
    f.name = std::move(name);
    f.summary = "polynomial of degree " + std::to_string(d.degree());
    f.origin_zero_order = d.origin_order;
    f.log_leading = std::log(std::abs(d.coeffs[static_cast<std::size_t>(
        d.origin_order)]));
    auto roots = d.nonzero_roots;
    f.zeros_up_to = [roots](double r) {
        std::vector<cplx> out;
        for (const cplx& a : roots)
            if (std::abs(a) <= r * (1.0 + 1e-12)) out.push_back(a);
        return out;
    };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.log_modulus = [d = std::move(d)](cplx z) { return d.log_modulus(z); };
    return f;
}

MeromorphicModel make_rational_model(std::string name, std::vector<double> num,
                                     std::vector<double> den) {
    PolyData p = analyze_polynomial(num);
    PolyData q = analyze_polynomial(den);
    for (const cplx& a : p.nonzero_roots)
        for (const cplx& b : q.nonzero_roots)
            if (std::abs(a - b) <= 1e-8 * (1.0 + std::abs(a)))
                throw std::invalid_argument(
                    "rational model has a common factor between numerator and "
                    "denominator");
    if (p.origin_order > 0 && q.origin_order > 0)
        throw std::invalid_argument(
            "rational model has a common factor of z at the origin");

    MeromorphicModel f;
    f.name = std::move(name);
    f.summary = "rational of degree " +
                std::to_string(std::max(p.degree(), q.degree()));
    long net = p.origin_order - q.origin_order;
    f.origin_zero_order = std::max(0L, net);
    f.origin_pole_order = std::max(0L, -net);
    f.log_leading =
        std::log(std::abs(p.coeffs[static_cast<std::size_t>(p.origin_order)])) -
        std::log(std::abs(q.coeffs[static_cast<std::size_t>(q.origin_order)]));
    auto zeros = p.nonzero_roots;
    auto poles = q.nonzero_roots;
    f.zeros_up_to = [zeros](double r) {
        std::vector<cplx> out;
        for (const cplx& a : zeros)
            if (std::abs(a) <= r * (1.0 + 1e-12)) out.push_back(a);
        return out;
    };
    f.poles_up_to = [poles](double r) {
        std::vector<cplx> out;
        for (const cplx& b : poles)
            if (std::abs(b) <= r * (1.0 + 1e-12)) out.push_back(b);
        return out;
    };
    f.log_modulus = [p = std::move(p), q = std::move(q)](cplx z) {
        return p.log_modulus(z) - q.log_modulus(z);
    };
    return f;
}

MeromorphicModel shift_model(const MeromorphicModel& f, double c) {
    MeromorphicModel g;
    g.name = f.name + " shifted by " + format_shift(c);
    g.summary = g.name;
    g.max_radius = f.max_radius - std::fabs(c);

    auto base = f.log_modulus;
    g.log_modulus = [base, c](cplx z) { return base(z + c); };

    double origin_tol = 1e-9 * (1.0 + std::fabs(c));
    auto remap = [c, origin_tol](const std::vector<cplx>& pts, double r) {
        std::vector<cplx> out;
        for (const cplx& a : pts) {
            cplx w = a - c;
            if (std::abs(w) <= origin_tol) continue;  // counted at the origin
            if (std::abs(w) <= r * (1.0 + 1e-12)) out.push_back(w);
        }
        return out;
    };
    auto fz = f.zeros_up_to;
    auto fp = f.poles_up_to;
    double ac = std::fabs(c);
    g.zeros_up_to = [fz, remap, ac](double r) { return remap(fz(r + ac + 1.0), r); };
    g.poles_up_to = [fp, remap, ac](double r) { return remap(fp(r + ac + 1.0), r); };

    // origin data of the shifted function: multiplicity of c in f's divisor
    long z0 = 0, p0 = 0;
    if (std::fabs(c) <= origin_tol) {
        z0 = f.origin_zero_order;
        p0 = f.origin_pole_order;
    } else {
        for (const cplx& a : f.zeros_up_to(ac + 1.0))
            if (std::abs(a - c) <= origin_tol) ++z0;
        for (const cplx& b : f.poles_up_to(ac + 1.0))
            if (std::abs(b - c) <= origin_tol) ++p0;
    }
    g.origin_zero_order = z0;
    g.origin_pole_order = p0;

    cplx probe = 1e-8 * std::polar(1.0, 0.7);
    double net = static_cast<double>(z0 - p0);
    double val = g.log_modulus(probe) - net * std::log(std::abs(probe));
    if (!std::isfinite(val)) {
        probe *= 3.7;
        val = g.log_modulus(probe) - net * std::log(std::abs(probe));
    }
    g.log_leading = val;
    return g;
}

MeromorphicModel invert_model(const MeromorphicModel& f) {
    MeromorphicModel g;
    g.name = "1/(" + f.name + ")";
    g.summary = g.name;
    g.max_radius = f.max_radius;
    auto base = f.log_modulus;
    g.log_modulus = [base](cplx z) { return -base(z); };
    g.zeros_up_to = f.poles_up_to;
    g.poles_up_to = f.zeros_up_to;
    g.origin_zero_order = f.origin_pole_order;
    g.origin_pole_order = f.origin_zero_order;
    g.log_leading = -f.log_leading;
    return g;
}

namespace {

MeromorphicModel make_exp_model() {
    MeromorphicModel f;
    f.name = "exp";
    f.summary = "e^z: order 1, no zeros or poles, T(r) = r/pi";
    f.log_modulus = [](cplx z) { return z.real(); };
    f.zeros_up_to = [](double) { return std::vector<cplx>{}; };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.log_leading = 0.0;
    return f;
}

MeromorphicModel make_exp_z2_model() {
    MeromorphicModel f;
    f.name = "exp-z2";
    f.summary = "e^(z^2): order 2, entire and zero free";
    f.log_modulus = [](cplx z) {
        return z.real() * z.real() - z.imag() * z.imag();
    };
    f.zeros_up_to = [](double) { return std::vector<cplx>{}; };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.log_leading = 0.0;
    f.max_radius = 1e120;
    return f;
}

MeromorphicModel make_expexp_model() {
    MeromorphicModel f;
    f.name = "expexp";
    f.summary = "e^(e^z): infinite order, hyper order 1";
    f.log_modulus = [](cplx z) {
        return std::exp(z.real()) * std::cos(z.imag());
    };
    f.zeros_up_to = [](double) { return std::vector<cplx>{}; };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.log_leading = 1.0;  // f(0) = e
    f.max_radius = 700.0;
    return f;
}

MeromorphicModel make_sin_model() {
    MeromorphicModel f;
    f.name = "sin";
    f.summary = "sin z: order 1, zeros on the real axis";
    f.log_modulus = [](cplx z) {
        double y = std::fabs(z.imag());
        if (y > 20.0) return y - M_LN2;  // |sin z| ~ e^|Im z| / 2
        return std::log(std::abs(std::sin(z)));
    };
    f.zeros_up_to = [](double r) {
        std::vector<cplx> out;
        long kmax = static_cast<long>(std::floor(r * (1.0 + 1e-12) / M_PI));
        for (long k = 1; k <= kmax; ++k) {
            double x = M_PI * static_cast<double>(k);
            out.emplace_back(x, 0.0);
            out.emplace_back(-x, 0.0);
        }
        return out;
    };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.origin_zero_order = 1;
    f.log_leading = 0.0;
    f.max_radius = 1e6;
    return f;
}

constexpr long kPoles = 64;

MeromorphicModel make_pole_comb_model() {
    MeromorphicModel f;
    f.name = "pole-comb";
    f.summary = "product of 1/(1 - z/n), n = 1..64: simple poles at the "
                "positive integers";
    f.log_modulus = [](cplx z) {
        double acc = 0.0;
        for (long n = 1; n <= kPoles; ++n)
            acc -= std::log(std::abs(1.0 - z / static_cast<double>(n)));
        return acc;
    };
    f.zeros_up_to = [](double) { return std::vector<cplx>{}; };
    f.poles_up_to = [](double r) {
        std::vector<cplx> out;
        long nmax = std::min<long>(
            kPoles, static_cast<long>(std::floor(r * (1.0 + 1e-12))));
        for (long n = 1; n <= nmax; ++n)
            out.emplace_back(static_cast<double>(n), 0.0);
        return out;
    };
    f.log_leading = 0.0;  // f(0) = 1
    f.max_radius = static_cast<double>(kPoles);
    return f;
}

MeromorphicModel make_const_model() {
    MeromorphicModel f;
    f.name = "const-3";
    f.summary = "the constant 3: T(r) = log 3";
    f.log_modulus = [](cplx) { return std::log(3.0); };
    f.zeros_up_to = [](double) { return std::vector<cplx>{}; };
    f.poles_up_to = [](double) { return std::vector<cplx>{}; };
    f.log_leading = std::log(3.0);
    return f;
}

std::vector<MeromorphicModel> make_catalogue() {
    std::vector<MeromorphicModel> models;
    models.push_back(make_const_model());
    models.push_back(make_polynomial_model("z", {0.0, 1.0}));
    models.back().summary = "the identity: T(r) = log r for r >= 1";
    models.push_back(make_polynomial_model("cubic", {0.0, -1.0, 0.0, 1.0}));
    models.back().summary = "z^3 - z: T(r) = 3 log r + O(1)";
    models.push_back(
        make_rational_model("rational", {1.0, 0.0, 1.0}, {-4.0, 0.0, 1.0}));
    models.back().summary = "(z^2+1)/(z^2-4): zeros at +-i, poles at +-2";
    models.push_back(make_exp_model());
    models.push_back(make_exp_z2_model());
    models.push_back(make_expexp_model());
    models.push_back(make_sin_model());
    models.push_back(make_pole_comb_model());
    return models;
}

}  // namespace

const std::vector<MeromorphicModel>& builtin_models() {
    static const std::vector<MeromorphicModel> models = make_catalogue();
    return models;
}

const MeromorphicModel& find_model(const std::string& name) {
    for (const MeromorphicModel& m : builtin_models())
        if (m.name == name) return m;
    std::string msg = "unknown model \"" + name + "\"; available:";
    for (const MeromorphicModel& m : builtin_models()) msg += " " + m.name;
    throw std::domain_error(msg);
}

}  // namespace growthlab
