#include "doctest.h"
#include "rmt/polynomial.hpp"

using rmt::Polynomial;
using rmt::Rational;

TEST_CASE("polynomial basics") {
    const Polynomial t = Polynomial::variable();
    CHECK(Polynomial().degree() == -1);
    CHECK((t * t).derivative() == t * Rational(2));
    const Polynomial q = t * t - Polynomial(Rational(1, 4));
    CHECK(q(Rational(1, 2)) == Rational(0));
    CHECK((t + Polynomial(1)) * (t - Polynomial(1)) == t * t - Polynomial(1));
    CHECK((t - t).is_zero());
    CHECK((t * t * t + t).reflected() == -(t * t * t + t));
}

TEST_CASE("derivative lowers degree by one") {
    Polynomial p(std::vector<Rational>{1, 2, 3, Rational(1, 7), 5});
    for (int d = p.degree(); d > 0; --d) {
        p = p.derivative();
        CHECK(p.degree() == d - 1);
    }
}

TEST_CASE("interpolation recovers the polynomial") {
    const Polynomial p(std::vector<Rational>{Rational(-3, 2), 0, 4, Rational(1, 3)});
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = -2; i < 2; ++i) {
        xs.emplace_back(i);
        ys.push_back(p(Rational(i)));
    }
    CHECK(rmt::interpolate(xs, ys) == p);
}
