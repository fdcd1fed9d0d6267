#include "growthlab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "growthlab/errors.hpp"

namespace growthlab {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Polynomial Polynomial::constant(const ExactRational& v) {
    Polynomial p;
    if (!v.is_zero()) p.c_ = {v};
    return p;
}

Polynomial Polynomial::variable() { return Polynomial({0, 1}); }

const ExactRational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

std::size_t Polynomial::count_nonzero() const {
    std::size_t n = 0;
    for (const auto& v : c_)
        if (!v.is_zero()) ++n;
    return n;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactRational Polynomial::eval(const ExactRational& x) const {
    ExactRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const { return scale(ExactRational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<ExactRational> c(std::max(a.c_.size(), b.c_.size()), ExactRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<ExactRational> c(a.c_.size() + b.c_.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scale(const ExactRational& k) const {
    if (k.is_zero()) return zero();
    std::vector<ExactRational> c(c_);
    for (auto& v : c) v *= k;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return scale(ExactRational(1) / leading());
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    std::vector<ExactRational> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                                 ExactRational(0));
    const ExactRational inv_lead = ExactRational(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        ExactRational f = r.leading() * inv_lead;
        q[shift] = f;
        std::vector<ExactRational> sub(shift, ExactRational(0));
        sub.insert(sub.end(), b.c_.begin(), b.c_.end());
        Polynomial s(std::move(sub));
        r = r - s.scale(f);
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divexact(const Polynomial& a, const Polynomial& b) {
    DivMod dm = divmod(a, b);
    if (!dm.rem.is_zero()) throw std::logic_error("divexact: nonzero remainder");
    return dm.quot;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace {

// Integer polynomial layer for the fraction-free remainder sequence.
using ZPoly = std::vector<mpz_class>;  // [i] = coefficient of y^i, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    mpz_class g = zcontent(p);
    if (g == 0) return {};
    ZPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(q[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
    if (q.back() < 0)
        for (auto& c : q) c = -c;
    return q;
}

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), exact over Z.
// Each reduction round scales by lc(b) once; when the degree falls by more
// than one per round the remainder is padded with the missing powers so the
// result always carries the full exponent (the subresultant divisions below
// rely on that exactness).
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    const mpz_class& lb = b.back();
    long spare = zdeg(a) - db + 1;
    while (zdeg(a) >= db) {
        int shift = zdeg(a) - db;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        ztrim(a);
        --spare;
    }
    if (spare > 0 && !a.empty()) {
        mpz_class pad;
        mpz_pow_ui(pad.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(spare));
        for (auto& c : a) c *= pad;
    }
    return a;
}

// Clear denominators and strip content: the primitive integer image of p.
ZPoly to_primitive_z(const Polynomial& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        mpz_class scaled;
        mpz_divexact(scaled.get_mpz_t(), lcm.get_mpz_t(), p.coeffs()[i].den().get_mpz_t());
        z[i] = scaled * p.coeffs()[i].num();
    }
    ztrim(z);
    return zprimitive(z);
}

Polynomial from_z(const ZPoly& z) {
    std::vector<ExactRational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = ExactRational(z[i]);
    return Polynomial(std::move(c));
}

// Subresultant polynomial remainder sequence; returns the primitive gcd.
ZPoly z_gcd(ZPoly a, ZPoly b) {
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty()) return zprimitive(b);
        if (zdeg(r) == 0) return {mpz_class(1)};
        a = std::move(b);
        // b = r / (g * h^delta), exact by the subresultant theory
        mpz_class div = g;
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        div *= hp;
        b.assign(r.size(), mpz_class(0));
        for (std::size_t i = 0; i < r.size(); ++i)
            mpz_divexact(b[i].get_mpz_t(), r[i].get_mpz_t(), div.get_mpz_t());
        g = a.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            mpz_class gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hp2;
            mpz_pow_ui(hp2.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp2.get_mpz_t());
        }
    }
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial::constant(1);
    ZPoly g = z_gcd(to_primitive_z(a), to_primitive_z(b));
    return from_z(g).monic();
}

RationalFunction RationalFunction::identity() {
    return RationalFunction(Polynomial::variable(), Polynomial::constant(1));
}

RationalFunction RationalFunction::constant(const ExactRational& v) {
    return RationalFunction(Polynomial::constant(v), Polynomial::constant(1));
}

int RationalFunction::degree() const {
    if (num_.is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

ExactRational RationalFunction::eval(const ExactRational& x) const {
    ExactRational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction normalize(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("normalize: zero denominator");
    if (num.is_zero()) return RationalFunction();  // 0/1
    Polynomial n = num, d = den;
    Polynomial g = poly_gcd(n, d);
    if (g.degree() >= 1) {
        n = Polynomial::divexact(n, g);
        d = Polynomial::divexact(d, g);
    }
    ExactRational inv_lead = ExactRational(1) / d.leading();
    return RationalFunction(n.scale(inv_lead), d.scale(inv_lead));
}

int degree(const RationalFunction& r) { return r.degree(); }

RationalFunction substitute(const RationalFunction& outer, const RationalFunction& inner) {
    const Polynomial& A = inner.num();
    const Polynomial& B = inner.den();
    int dp = outer.num().degree();
    int dq = outer.den().degree();
    int D = std::max({dp, dq, 0});
    // powers of A and B up to D
    std::vector<Polynomial> Ap(static_cast<std::size_t>(D) + 1, Polynomial::constant(1));
    std::vector<Polynomial> Bp(static_cast<std::size_t>(D) + 1, Polynomial::constant(1));
    for (int i = 1; i <= D; ++i) {
        Ap[static_cast<std::size_t>(i)] = Ap[static_cast<std::size_t>(i - 1)] * A;
        Bp[static_cast<std::size_t>(i)] = Bp[static_cast<std::size_t>(i - 1)] * B;
    }
    auto lift = [&](const Polynomial& p) {
        Polynomial acc = Polynomial::zero();
        for (int i = 0; i <= p.degree(); ++i) {
            ExactRational ci = p.coeff(static_cast<std::size_t>(i));
            if (ci.is_zero()) continue;
            acc = acc + (Ap[static_cast<std::size_t>(i)] * Bp[static_cast<std::size_t>(D - i)]).scale(ci);
        }
        return acc;
    };
    Polynomial sp = lift(outer.num());
    Polynomial sq = lift(outer.den());
    if (sq.is_zero()) throw degeneracy_error("composition collapsed: denominator vanished identically");
    return normalize(sp, sq);
}

}  // namespace growthlab
