#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "growthlab/rational.hpp"

using growthlab::ExactRational;
using growthlab::log_height;
using growthlab::parse_rational;
using growthlab::reduce;

namespace {

// Independent reducer over machine integers, used as an oracle.
struct Frac {
    std::int64_t num, den;
};

Frac brute_reduce(std::int64_t p, std::int64_t q) {
    if (q < 0) { p = -p; q = -q; }
    std::int64_t a = p < 0 ? -p : p, b = q;
    while (b != 0) { std::int64_t t = a % b; a = b; b = t; }
    if (a == 0) return {0, 1};
    return {p / a, q / a};
}

}  // namespace

TEST_SUITE("heights") {

TEST_CASE("reduce canonicalizes sign and gcd") {
    CHECK(reduce(-4, -6) == reduce(2, 3));
    CHECK(reduce(-4, -6).str() == "2/3");
    CHECK(reduce(0, 5).str() == "0/1");
    CHECK(reduce(252, 105).str() == "12/5");
    CHECK(reduce(7, -3).str() == "-7/3");
}

TEST_CASE("reduce rejects zero denominator") {
    CHECK_THROWS_AS(reduce(1, 0), std::domain_error);
}

TEST_CASE("reduce is idempotent") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
        std::int64_t p = d(rng), q = d(rng);
        if (q == 0) continue;
        ExactRational x = reduce(p, q);
        CHECK(reduce(x.num(), x.den()) == x);
    }
}

TEST_CASE("reduce agrees with a brute-force oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t p = d(rng), q = d(rng);
        if (q == 0) continue;
        ExactRational x = reduce(p, q);
        Frac f = brute_reduce(p, q);
        CHECK(x.num() == mpz_class(static_cast<long>(f.num)));
        CHECK(x.den() == mpz_class(static_cast<long>(f.den)));
    }
}

TEST_CASE("log_height closed forms") {
    CHECK(log_height(reduce(1, 1)) == 0.0);
    CHECK(log_height(reduce(-1, 1)) == 0.0);
    CHECK(log_height(reduce(0, 7)) == 0.0);
    CHECK(log_height(reduce(3, 5)) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
    CHECK(log_height(reduce(256, 1)) == doctest::Approx(8.0 * M_LN2).epsilon(1e-14));
    CHECK(log_height(reduce(2, 3)) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("height machine bounds") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
    const double log2 = std::log(2.0);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t p1 = d(rng), q1 = d(rng), p2 = d(rng), q2 = d(rng);
        if (q1 == 0 || q2 == 0) continue;
        ExactRational x = reduce(p1, q1), y = reduce(p2, q2);
        double hx = log_height(x), hy = log_height(y);
        CHECK(log_height(x * y) <= hx + hy + 1e-12);
        CHECK(log_height(x + y) <= hx + hy + log2 + 1e-12);
        if (!x.is_zero()) {
            // h(1/x) = h(x): same pair {|num|, den} after inversion.
            CHECK(log_height(reduce(x.den(), x.num())) == hx);
        }
    }
}

TEST_CASE("arithmetic stays canonical") {
    ExactRational a = reduce(1, 6), b = reduce(1, 3);
    CHECK((a + b).str() == "1/2");
    CHECK((b - a).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "1/2");
    CHECK_THROWS_AS(a / ExactRational(0), std::domain_error);
}

TEST_CASE("parse round trips") {
    CHECK(parse_rational("5/8") == reduce(5, 8));
    CHECK(parse_rational("-12") == reduce(-12, 1));
    CHECK(parse_rational("6/-4").str() == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("x/y"), std::domain_error);
}

TEST_CASE("bit size tracks the larger component") {
    CHECK(reduce(1, 1).bit_size() == 1);
    CHECK(reduce(255, 2).bit_size() == 8);
    ExactRational big(mpz_class("123456789123456789123456789"));
    CHECK(big.bit_size() >= 80);
}

}  // TEST_SUITE
