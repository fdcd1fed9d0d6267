#include "growthlab/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace growthlab {

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::size_t ExactRational::bit_size() const {
    std::size_t nb = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.str(); }

ExactRational reduce(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("reduce: zero denominator");
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return ExactRational(q);
}

ExactRational reduce(long num, long den) { return reduce(mpz_class(num), mpz_class(den)); }

ExactRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return reduce(mpz_class(text), mpz_class(1));
        return reduce(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: '" + text + "'");
    }
}

namespace {

// log|z| for arbitrary-size z: mpz_get_d_2exp gives z = d * 2^e with
// 0.5 <= |d| < 1, so log|z| = log|d| + e*log 2 without overflow.
double log_abs(const mpz_class& z) {
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * M_LN2;
}

}  // namespace

double log_height(const ExactRational& x) {
    if (x.is_zero()) return 0.0;
    mpz_class n = abs(x.num());
    mpz_class d = x.den();
    const mpz_class& big = n >= d ? n : d;
    if (big == 1) return 0.0;
    return log_abs(big);
}

}  // namespace growthlab
