#include "doctest.h"
#include "rmt/asymptotics.hpp"
#include "rmt/errors.hpp"

using rmt::Parity;
using rmt::Rational;
using rmt::SeriesSource;

TEST_CASE("Bernoulli numbers") {
    const auto& b = rmt::bernoulli_table(12);
    CHECK(b.number(1) == Rational(-1, 2));
    CHECK(b.number(2) == Rational(1, 6));
    CHECK(b.number(3) == Rational(0));
    CHECK(b.number(4) == Rational(-1, 30));
    CHECK(b.number(12) == Rational(-691, 2730));
    // B_j(1) = B_j(0) for j >= 2
    for (int j = 2; j <= 12; ++j) CHECK(b.polynomial(j)(Rational(1)) == b.number(j));
}

TEST_CASE("gamma ratio series") {
    const auto half = rmt::gamma_ratio_series(Rational(1, 2), Rational(0), 4);
    CHECK(half[0] == Rational(1));
    CHECK(half[1] == Rational(-1, 8));
    CHECK(half[2] == Rational(1, 128));
    CHECK(half[3] == Rational(5, 1024));
    // Γ(z+1)/Γ(z) = z exactly
    const auto one = rmt::gamma_ratio_series(Rational(1), Rational(0), 10);
    for (int k = 1; k <= 10; ++k) CHECK(one[static_cast<std::size_t>(k)].is_zero());
    CHECK_THROWS_AS(rmt::gamma_ratio_series(Rational(1), Rational(0), rmt::kMaxStirlingOrder + 1), rmt::ResourceError);
}

TEST_CASE("stored series match the regenerated series") {
    for (Parity par : {Parity::Even, Parity::Odd}) {
        for (int p = 1; p <= 19; ++p) {
            const auto stored = rmt::cd_series(p, par, 6);
            const auto regen = rmt::cd_series_regenerated(p, par, 6);
            for (int k = 0; k <= 6; ++k) {
                CHECK_MESSAGE(stored[static_cast<std::size_t>(k)] == regen[static_cast<std::size_t>(k)],
                              "p=" << p << " k=" << k << " " << rmt::parity_name(par));
            }
        }
        const auto stored = rmt::cd_series(1, par, 9);
        const auto regen = rmt::cd_series_regenerated(1, par, 9);
        for (int k = 0; k <= 9; ++k) CHECK(stored[static_cast<std::size_t>(k)] == regen[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("stored series spot values") {
    CHECK(rmt::cd_series(1, Parity::Even, 3)[1] == Rational(5, 6));
    CHECK(rmt::cd_series(1, Parity::Odd, 3)[2] == Rational(1, 18));
    CHECK(rmt::cd_series(2, Parity::Even, 1)[1] == Rational(2 * 17, 6));
    CHECK_THROWS_AS(rmt::cd_series(2, Parity::Even, 7), rmt::RangeError);
    CHECK_THROWS_AS(rmt::cd_series(1, Parity::Odd, 10), rmt::RangeError);
    CHECK_THROWS_AS(rmt::parity_average(rmt::cd_series(1, Parity::Even, 3), rmt::cd_series(1, Parity::Odd, 4)),
                    rmt::RangeError);
}

TEST_CASE("semicircle Taylor coefficients") {
    const auto s = rmt::semicircle_taylor(12);
    CHECK(s.coefficient(0) == Rational(1));
    CHECK(s.coefficient(2) == Rational(-1, 8));
    CHECK(s.coefficient(4) == Rational(-1, 128));
    CHECK(s.coefficient(1).is_zero());
    // square is 1 - t²/4 up to the truncation
    const auto sq = s * s;
    CHECK(sq.coefficient(0) == Rational(1));
    CHECK(sq.coefficient(2) == Rational(-1, 4));
    for (std::size_t k = 3; k <= 12; ++k) CHECK(sq.coefficient(k).is_zero());
    CHECK_THROWS_AS(rmt::semicircle_taylor(3), rmt::DomainError);
}

TEST_CASE("semicircle recovery for p = 1") {
    const auto r = rmt::semicircle_recovery(1, 10, 9, SeriesSource::Stored);
    CHECK(r.ok());
    const Rational expected[] = {Rational(1), Rational(-1, 8), Rational(-1, 128), Rational(-1, 1024),
                                 Rational(-5, 32768), Rational(-7, 262144)};
    REQUIRE(r.rows.size() == 6);
    for (std::size_t j = 0; j < 6; ++j) CHECK(r.rows[j].recovered == expected[j]);
    // individual parities carry positive powers that cancel in the mean
    CHECK(r.rows[1].even.top > 0);
    bool someNonzero = false;
    for (int e = 1; e <= r.rows[1].even.top; ++e) someNonzero = someNonzero || !r.rows[1].even.at(e).is_zero();
    CHECK(someNonzero);
    CHECK(r.rows[1].positive_powers_vanish);
}

TEST_CASE("recovery needs enough orders") {
    const int required = rmt::recovery_required_order(1, 10);
    CHECK(required <= 9);
    CHECK_THROWS_AS(rmt::semicircle_recovery(1, 10, required - 1, SeriesSource::Stored), rmt::OrderStarvation);
    CHECK(rmt::semicircle_recovery(1, 10, required, SeriesSource::Stored).ok());
}

TEST_CASE("recovery for general p through t^2") {
    for (int p = 1; p <= 4; ++p) {
        const auto r = rmt::semicircle_recovery(p, 2, 6, SeriesSource::Stored);
        CHECK(r.ok());
        const Rational P(p);
        const Rational P2 = P * P;
        CHECK(r.rows[1].recovered == -P2 / Rational(8));
        CHECK(r.rows[0].normalized.at(-1) == P * (Rational(8) * P2 - Rational(1)) / Rational(12));
        CHECK(r.rows[0].normalized.at(-2) ==
              P2 * (Rational(32) * P2 * P2 - Rational(56) * P2 + Rational(17)) / Rational(144));
        CHECK(r.rows[1].normalized.at(0).is_zero());
        // the factorised t²/N term is p³/8; p(13p²-1)/96 only agrees at p = 1
        CHECK(r.rows[1].normalized.at(-1) == P2 * P / Rational(8));
    }
}

TEST_CASE("t^4 term of the average departs from the density for p > 1") {
    for (int p = 1; p <= 5; ++p) {
        const auto r = rmt::semicircle_recovery(p, 4, 6, SeriesSource::Stored);
        const Rational P2(p * p);
        CHECK(r.rows[2].positive_powers_vanish);
        CHECK(r.rows[2].recovered - r.rows[2].expected == P2 * (P2 - Rational(1)) / Rational(192));
        CHECK(r.ok() == (p == 1));
    }
}

TEST_CASE("regenerated recovery agrees with stored") {
    const auto a = rmt::semicircle_recovery(2, 4, 6, SeriesSource::Stored);
    const auto b = rmt::semicircle_recovery(2, 4, 6, SeriesSource::Regenerated);
    for (std::size_t j = 0; j < a.rows.size(); ++j) {
        for (int e = a.rows[j].normalized.top; e >= a.rows[j].normalized.bottom; --e) {
            CHECK(a.rows[j].normalized.at(e) == b.rows[j].normalized.at(e));
        }
    }
}

TEST_CASE("truncation error decays at the next order") {
    for (Parity par : {Parity::Even, Parity::Odd}) {
        const int off = par == Parity::Even ? 0 : 1;
        for (int K : {1, 3}) {
            const auto r = rmt::cd_convergence(1, par, K, 60 + off, 120 + off);
            CHECK_MESSAGE(r.within(0.15), "K=" << K << " exponent " << r.observed_exponent);
        }
    }
    CHECK_THROWS_AS(rmt::cd_convergence(1, Parity::Even, 2, 61, 120), rmt::DomainError);
}
