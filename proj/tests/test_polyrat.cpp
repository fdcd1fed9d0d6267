#include <doctest.h>

#include <random>
#include <stdexcept>

#include "growthlab/errors.hpp"
#include "growthlab/polynomial.hpp"

using growthlab::degeneracy_error;
using growthlab::ExactRational;
using growthlab::normalize;
using growthlab::Polynomial;
using growthlab::poly_gcd;
using growthlab::RationalFunction;
using growthlab::reduce;
using growthlab::substitute;

namespace {

Polynomial rand_poly(std::mt19937& rng, int max_deg, bool force_deg = false) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<long> cd(-5, 5);
    int deg = force_deg ? max_deg : degd(rng);
    std::vector<ExactRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = ExactRational(cd(rng));
    while (c.back().is_zero()) c.back() = ExactRational(cd(rng));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_SUITE("polyrat") {

TEST_CASE("gcd of shared-root pair") {
    Polynomial a({-1, 0, 1});  // y^2 - 1
    Polynomial b({-1, 1});     // y - 1
    CHECK(poly_gcd(a, b) == b);
}

TEST_CASE("gcd of coprime pair is 1") {
    Polynomial a({1, 0, 1});  // y^2 + 1
    Polynomial b({2, 1});     // y + 2
    CHECK(poly_gcd(a, b) == Polynomial::constant(1));
}

TEST_CASE("gcd strips content and normalizes monic") {
    Polynomial a({-2, 0, 2});  // 2y^2 - 2
    Polynomial b({-4, 4});     // 4y - 4
    CHECK(poly_gcd(a, b) == Polynomial({-1, 1}));
}

TEST_CASE("gcd edge cases") {
    Polynomial z;
    Polynomial a({-1, 0, 1});
    CHECK_THROWS_AS(poly_gcd(z, z), std::domain_error);
    CHECK(poly_gcd(a, z) == a.monic());
    CHECK(poly_gcd(z, a) == a.monic());
    CHECK(poly_gcd(a, Polynomial::constant(reduce(7, 3))) == Polynomial::constant(1));
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        Polynomial g = rand_poly(rng, 2);
        Polynomial u = rand_poly(rng, 3);
        Polynomial v = rand_poly(rng, 3);
        if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
        Polynomial a = g * u, b = g * v;
        Polynomial d = poly_gcd(a, b);
        // exact divisibility, checked by exact division
        CHECK_NOTHROW(Polynomial::divexact(a, d));
        CHECK_NOTHROW(Polynomial::divexact(b, d));
        // d is a multiple of every common divisor; in particular deg d >= deg g
        // whenever g | gcd, which holds by construction
        CHECK(d.degree() >= 0);
        Polynomial::DivMod dm = Polynomial::divmod(d, poly_gcd(d, g));
        CHECK(dm.rem.is_zero());
    }
}

TEST_CASE("divmod invariant") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = rand_poly(rng, 5);
        Polynomial b = rand_poly(rng, 3);
        if (b.is_zero()) continue;
        auto dm = Polynomial::divmod(a, b);
        CHECK(dm.quot * b + dm.rem == a);
        CHECK(dm.rem.degree() < b.degree());
    }
}

TEST_CASE("normalize cancels and rescales") {
    // (y^2 - 1)/(y - 1) -> (y + 1)/1
    RationalFunction r = normalize(Polynomial({-1, 0, 1}), Polynomial({-1, 1}));
    CHECK(r.num() == Polynomial({1, 1}));
    CHECK(r.den() == Polynomial::constant(1));
    CHECK(r.degree() == 1);

    // (y + 1)/(2y + 4) -> ((y+1)/2)/(y + 2)
    RationalFunction s = normalize(Polynomial({1, 1}), Polynomial({4, 2}));
    CHECK(s.den() == Polynomial({2, 1}));
    CHECK(s.num() == Polynomial({reduce(1, 2), reduce(1, 2)}).scale(1));
    CHECK(s.degree() == 1);

    // (0, y) -> 0/1
    RationalFunction t = normalize(Polynomial::zero(), Polynomial::variable());
    CHECK(t.num().is_zero());
    CHECK(t.den() == Polynomial::constant(1));

    CHECK_THROWS_AS(normalize(Polynomial({1}), Polynomial::zero()), std::domain_error);
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 100; ++i) {
        Polynomial n = rand_poly(rng, 4);
        Polynomial d = rand_poly(rng, 4);
        if (d.is_zero()) continue;
        RationalFunction r = normalize(n, d);
        RationalFunction r2 = normalize(r.num(), r.den());
        CHECK(r == r2);
        CHECK(poly_gcd(r.num().is_zero() ? Polynomial::constant(1) : r.num(), r.den()).degree() == 0);
        if (!r.den().is_zero()) CHECK(r.den().leading() == ExactRational(1));
    }
}

TEST_CASE("degree bookkeeping") {
    CHECK(normalize(Polynomial({1, 1}), Polynomial({2, 0, 1})).degree() == 2);
    CHECK(normalize(Polynomial({0, 0, 1}), Polynomial({1})).degree() == 2);
    CHECK(normalize(Polynomial({reduce(7, 3)}), Polynomial({1})).degree() == 0);
    CHECK(RationalFunction().degree() == 0);  // zero function
}

TEST_CASE("substitution examples") {
    // outer y^2, inner (y+1)/y -> (y^2 + 2y + 1)/y^2
    RationalFunction outer = normalize(Polynomial({0, 0, 1}), Polynomial({1}));
    RationalFunction inner = normalize(Polynomial({1, 1}), Polynomial({0, 1}));
    RationalFunction comp = substitute(outer, inner);
    CHECK(comp.num() == Polynomial({1, 2, 1}));
    CHECK(comp.den() == Polynomial({0, 0, 1}));
    CHECK(comp.degree() == 2);

    // identity inner is a no-op
    RationalFunction riccati = normalize(Polynomial({1, 1}), Polynomial({2, 1}));
    CHECK(substitute(riccati, RationalFunction::identity()) == riccati);

    // constant inner sitting on a pole of outer collapses
    RationalFunction pole = normalize(Polynomial({1}), Polynomial({-1, 1}));  // 1/(y-1)
    CHECK_THROWS_AS(substitute(pole, RationalFunction::constant(ExactRational(1))), degeneracy_error);
}

TEST_CASE("composition degree is multiplicative on generic instances") {
    std::mt19937 rng(31337);
    int equal = 0, total = 0;
    for (int i = 0; i < 150; ++i) {
        // force deg(inner num) > deg(inner den) so the top coefficient of the
        // brute-force expansion cannot cancel
        Polynomial in_n = rand_poly(rng, 3, /*force_deg=*/true);
        Polynomial in_d = rand_poly(rng, 1);
        Polynomial out_n = rand_poly(rng, 2);
        Polynomial out_d = rand_poly(rng, 2, /*force_deg=*/true);
        if (in_d.is_zero() || out_d.is_zero() || out_n.is_zero()) continue;
        RationalFunction outer = normalize(out_n, out_d);
        RationalFunction inner = normalize(in_n, in_d);
        if (outer.degree() == 0 || inner.degree() == 0) continue;

        RationalFunction comp;
        try {
            comp = substitute(outer, inner);
        } catch (const degeneracy_error&) {
            continue;
        }
        ++total;

        // brute-force expansion oracle: plain homogenized expansion without gcd
        int D = std::max(outer.num().degree(), outer.den().degree());
        Polynomial rawp = Polynomial::zero(), rawq = Polynomial::zero();
        for (int k = 0; k <= D; ++k) {
            Polynomial term = Polynomial::constant(1);
            for (int t = 0; t < k; ++t) term = term * inner.num();
            for (int t = k; t < D; ++t) term = term * inner.den();
            rawp = rawp + term.scale(outer.num().coeff(static_cast<std::size_t>(k)));
            rawq = rawq + term.scale(outer.den().coeff(static_cast<std::size_t>(k)));
        }
        // cross-multiplied equality of the normalized result with the raw pair
        CHECK(comp.num() * rawq == comp.den() * rawp);
        CHECK(comp.degree() <= outer.degree() * inner.degree());
        if (poly_gcd(rawp.is_zero() ? Polynomial::constant(1) : rawp, rawq).degree() == 0 &&
            comp.degree() == outer.degree() * inner.degree())
            ++equal;
        // pointwise agreement at a few sample points
        for (long x0 = -2; x0 <= 2; ++x0) {
            ExactRational x(x0);
            try {
                ExactRational lhs = outer.eval(inner.eval(x));
                ExactRational rhs = comp.eval(x);
                CHECK(lhs == rhs);
            } catch (const std::domain_error&) {
                // pole along the way; skip the sample
            }
        }
    }
    CHECK(total >= 80);
    CHECK(equal * 10 >= total * 8);  // generic instances hit the bound
}

TEST_CASE("evaluation and poles") {
    RationalFunction r = normalize(Polynomial({1, 1}), Polynomial({-4, 1}));
    CHECK(r.eval(ExactRational(5)) == ExactRational(6));
    CHECK_THROWS_AS(r.eval(ExactRational(4)), std::domain_error);
}

}  // TEST_SUITE
