#pragma once

// Exact univariate polynomial and rational-function arithmetic over Q.
// Rational functions are kept in the unique normal form: numerator and
// denominator coprime, denominator monic.

#include <initializer_list>
#include <string>
#include <vector>

#include "growthlab/rational.hpp"

namespace growthlab {

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const ExactRational& v);
    static Polynomial variable();  // the monomial y

    bool is_zero() const { return c_.empty(); }
    // Degree as an int; the zero polynomial reports -1, a sentinel that
    // stays inside this module (RationalFunction::degree clamps it away).
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const ExactRational& leading() const;
    ExactRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactRational(0); }
    const std::vector<ExactRational>& coeffs() const { return c_; }
    std::size_t count_nonzero() const;

    ExactRational eval(const ExactRational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scale(const ExactRational& k) const;
    Polynomial monic() const;

    // Field long division: a = q*b + r with deg r < deg b. b must be nonzero.
    struct DivMod;
    static DivMod divmod(const Polynomial& a, const Polynomial& b);
    // Exact division; throws std::logic_error when the remainder is nonzero.
    static Polynomial divexact(const Polynomial& a, const Polynomial& b);

    std::string str(const std::string& var = "y") const;

  private:
    void trim();
    std::vector<ExactRational> c_;  // c_[i] = coefficient of y^i
};

struct Polynomial::DivMod {
    Polynomial quot, rem;
};

// Monic greatest common divisor over Q, computed with a fraction-free
// (subresultant) remainder sequence over Z to bound coefficient blowup.
// Both inputs zero -> std::domain_error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

class RationalFunction {
  public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::constant(1)) {}

    static RationalFunction identity();
    static RationalFunction constant(const ExactRational& v);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    // max(deg num, deg den); constants and the zero function report 0.
    int degree() const;
    bool is_constant() const { return degree() == 0; }

    // Throws std::domain_error when x is a pole.
    ExactRational eval(const ExactRational& x) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // normal form is unique
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const std::string& var = "y") const;

    friend RationalFunction normalize(const Polynomial& num, const Polynomial& den);

  private:
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_, den_;
};

// Coprime pair with monic denominator; zero denominator -> std::domain_error.
RationalFunction normalize(const Polynomial& num, const Polynomial& den);

// max(deg num, deg den) of the normal form.
int degree(const RationalFunction& r);

// Composition outer(inner), renormalized. When the composed denominator
// collapses to the zero polynomial (inner is a constant sitting on a pole
// of outer) a degeneracy_error is thrown.
RationalFunction substitute(const RationalFunction& outer, const RationalFunction& inner);

}  // namespace growthlab
