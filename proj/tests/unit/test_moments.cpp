#include <cmath>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/moments.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt_oracle/oracles.hpp"

using rmt::EnsembleSpec;
using rmt::Partition;
using rmt::Polynomial;
using rmt::Rational;

namespace {

std::vector<EnsembleSpec> specs_for(int N) {
    return {EnsembleSpec::gue(N), EnsembleSpec::lue(N, 0), EnsembleSpec::lue(N, Rational(3, 2)),
            EnsembleSpec::jue(N, 0, 0), EnsembleSpec::jue(N, Rational(1, 2), 1)};
}

}  // namespace

TEST_CASE("first moment is the monic polynomial") {
    for (int N = 1; N <= 6; ++N) {
        for (const auto& spec : specs_for(N)) CHECK(rmt::moment_poly(spec, 1) == rmt::monic_polynomial(spec, N));
    }
}

TEST_CASE("routes agree") {
    const std::vector<Rational> ts{0, Rational(1, 2), Rational(-3, 7)};
    for (int N = 1; N <= 5; ++N) {
        for (const auto& spec : specs_for(N)) {
            for (int p = 1; p <= 3; ++p) {
                const Polynomial poly = rmt::moment_poly(spec, p);
                CHECK(poly.degree() == N * p);
                for (const auto& t : ts) {
                    const Rational v = poly(t);
                    CHECK(rmt::moment_derivative_det(spec, p, t) == v);
                    CHECK(rmt::moment_box_phi(spec, p, t) == v);
                }
            }
        }
    }
}

TEST_CASE("moments against explicit eigenvalue integrals") {
    for (int N = 1; N <= 3; ++N) {
        for (const auto& spec : specs_for(N)) {
            for (int p = 1; p <= 3; ++p) {
                for (const Rational t : {Rational(0), Rational(2, 3)}) {
                    const std::vector<Rational> pts(static_cast<std::size_t>(p), t);
                    CHECK(rmt::moment_poly(spec, p)(t) == rmt::oracle::correlation(spec, pts));
                }
            }
            const std::vector<Rational> distinct{Rational(1, 3), Rational(-2), Rational(5, 4)};
            CHECK(rmt::correlation(spec, distinct) == rmt::oracle::correlation(spec, distinct));
        }
    }
}

TEST_CASE("GUE at the origin") {
    CHECK(rmt::gue_moment_t0(2, 1) == Rational(3, 4));
    CHECK(rmt::gue_moment_t0(1, 1) == Rational(1));
    CHECK(std::abs(rmt::oracle::gue_moment_quadrature(2, 2, 0.0) - 0.75) < 1e-12);
    for (int N = 1; N <= 8; ++N) {
        for (int p = 1; p <= 3; ++p) {
            CHECK(rmt::gue_moment_t0(N, p) == rmt::moment_poly(EnsembleSpec::gue(N), 2 * p).coefficient(0));
            // γ_p divides out to a ratio of factorials.
            const Rational ratio = rmt::cd_exact(N, p) / rmt::gamma_p(p);
            CHECK(ratio.sign() == (N % 2 == 1 && p % 2 == 1 ? -1 : 1));
        }
    }
    CHECK(rmt::d_odd(2, 1) == Rational(-1) * Rational(2, 6) * rmt::d_even(2, 1));
    CHECK(rmt::moment_poly(EnsembleSpec::gue(3), 1)(Rational(0)) == Rational(0));
}

TEST_CASE("second moment single sums") {
    for (int N = 1; N <= 12; ++N) {
        const Polynomial poly = rmt::moment_poly(EnsembleSpec::gue(N), 2);
        const Rational c0 = poly.coefficient(0);
        CHECK(rmt::second_moment_coeff(N, 0) == Rational(1));
        for (int k = 0; k <= N; ++k) {
            CHECK(rmt::second_moment_coeff(N, k) == poly.coefficient(static_cast<std::size_t>(2 * k)) / c0);
            CHECK(rmt::gue_bracket_coefficient(N, 1, k) == rmt::second_moment_coeff(N, k));
        }
        CHECK(rmt::second_moment_coeff(N, N + 1) == Rational(0));
        if (N % 2 == 0) CHECK(rmt::second_moment_coeff(N, 1) == Rational(0));
    }
    const auto r = rmt::moment(EnsembleSpec::gue(5), 2, std::nullopt, rmt::MomentRoute::SecondMomentSums);
    CHECK(r.polynomial == rmt::moment_poly(EnsembleSpec::gue(5), 2));
}

TEST_CASE("bracket polynomials") {
    for (int p = 1; p <= 3; ++p) {
        CHECK(rmt::gue_bracket_polynomial(p, 1, rmt::Parity::Even).is_zero());
        CHECK(rmt::gue_bracket_polynomial(p, 1, rmt::Parity::Odd) == Polynomial::variable() * Rational(p));
        // t^4 coefficients: (2N)^2/4! N p (even) and (2N)^2/4! (p^2 - N p) (odd)
        const Polynomial N = Polynomial::variable();
        CHECK(rmt::gue_bracket_polynomial(p, 2, rmt::Parity::Even) == N * N * N * Rational(4 * p, 24));
        CHECK(rmt::gue_bracket_polynomial(p, 2, rmt::Parity::Odd) ==
              N * N * Rational(4, 24) * (Polynomial(Rational(p * p)) - N * Rational(p)));
    }
}

TEST_CASE("route dispatch") {
    const auto spec = EnsembleSpec::gue(2);
    auto r = rmt::moment(spec, 4, Rational(0), rmt::MomentRoute::ClosedFormT0);
    CHECK(*r.value == Rational(3, 4) * Rational(0) + rmt::gue_moment_t0(2, 2));
    r = rmt::moment(spec, 2, Rational(0), rmt::MomentRoute::PartitionSum);
    CHECK(*r.value == Rational(3, 4));
    for (auto route : {rmt::MomentRoute::BoxPhi, rmt::MomentRoute::DerivativeDet}) {
        const auto lue = EnsembleSpec::lue(2, Rational(1, 3));
        CHECK(rmt::moment(lue, 3, std::nullopt, route).polynomial == rmt::moment_poly(lue, 3));
        CHECK(rmt::parse_route(rmt::route_name(route)) == route);
    }
    CHECK_THROWS_AS(rmt::moment(EnsembleSpec::lue(2, 0), 2, Rational(0), rmt::MomentRoute::ClosedFormT0),
                    rmt::DomainError);
    rmt::MomentOptions tight;
    tight.partition_budget = 10;
    CHECK_THROWS_AS(rmt::moment_poly(spec, 5, tight), rmt::ResourceError);
}

TEST_CASE("GUE densities") {
    for (int N = 1; N <= 6; ++N) {
        const Polynomial r1 = rmt::one_point_density(N);
        for (const Rational t : {Rational(0), Rational(1, 2), Rational(-7, 3)}) {
            CHECK(r1(t) == rmt::oracle::gue_kernel(N, t, t));
        }
        // ∫ R_1 = N; with the Gaussian stripped, integrate against the weight.
        rmt::WeightMomentFunctional w(EnsembleSpec::gue(N));
        CHECK(w.integrate(r1) == Rational(N));
    }
    CHECK(rmt::one_point_density(2).degree() == 2);
    for (int N = 2; N <= 5; ++N) {
        const Rational a(1, 3);
        const Rational b(-2);
        const std::vector<Rational> pts{a, b};
        const Rational kab = rmt::oracle::gue_kernel(N, a, b);
        CHECK(rmt::correlation_density(N, pts) ==
              rmt::oracle::gue_kernel(N, a, a) * rmt::oracle::gue_kernel(N, b, b) - kab * kab);
    }
    CHECK_THROWS_AS(rmt::correlation_density(3, std::vector<Rational>{1, 2, 3}), rmt::DomainError);
}
