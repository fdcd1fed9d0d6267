#pragma once

// Exact rational arithmetic over Q and the logarithmic Weil height
// h(p/q) = log max(|p|, q) in lowest terms, natural-log units.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace growthlab {

class ExactRational {
  public:
    ExactRational() : q_(0) {}
    ExactRational(long n) : q_(n) {}  // NOLINT: implicit on purpose
    explicit ExactRational(const mpz_class& n) : q_(n) {}
    explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    // Canonical "p/q" form, denominator always present and positive.
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    // Bits needed for the larger of |num|, den.
    std::size_t bit_size() const;

    ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& x);

// Canonical lowest-terms form with positive denominator; throws
// std::domain_error when den = 0. Idempotent.
ExactRational reduce(const mpz_class& num, const mpz_class& den);
ExactRational reduce(long num, long den);

// Parses "p/q" or "p" (den = 0 or malformed input -> std::domain_error).
ExactRational parse_rational(const std::string& text);

// log max(|num|, den) in natural-log units; >= 0, and = 0 exactly for
// 0, 1 and -1. Exact in the integers, floating only at the final log.
double log_height(const ExactRational& x);

}  // namespace growthlab
