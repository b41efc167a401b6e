#include <random>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/rational.hpp"

using rmt::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), rmt::DomainError);
}

TEST_CASE("rational parse round trip") {
    for (const char* text : {"0", "-3", "22/7", "-5/12", "1234567890123456789012345678901/2"}) {
        CHECK(Rational::parse(text).str() == text);
    }
    CHECK(Rational::parse("4/-8") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse("1/2/3"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    for (int i = 0; i < 300; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("powers and factorials") {
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS(Rational(0).pow(-1));
    CHECK(rmt::factorial(0) == 1);
    CHECK(rmt::factorial(10) == 3628800);
    CHECK(rmt::inverse_factorial(-1) == Rational(0));
    CHECK(rmt::inverse_factorial(3) == Rational(1, 6));
    CHECK(rmt::rising(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(rmt::rising(Rational(-2), 3) == Rational(0));
    CHECK(rmt::binomial(6, 2) == 15);
    CHECK(rmt::binomial(3, 5) == 0);
    CHECK(rmt::binomial(Rational(1, 2), 2) == Rational(-1, 8));
}
