#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt/secular.hpp"
#include "rmt/symmetric_group.hpp"
#include "rmt_oracle/oracles.hpp"

using rmt::EnsembleSpec;
using rmt::Partition;
using rmt::Rational;

namespace {

Partition column(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

}  // namespace

TEST_CASE("secular means, spot values") {
    CHECK(rmt::secular_mean(EnsembleSpec::gue(2), 2) == Rational(-1, 2));
    CHECK(rmt::secular_mean(EnsembleSpec::gue(4), 2) == Rational(-3, 2));
    CHECK(rmt::secular_mean(EnsembleSpec::gue(5), 3).is_zero());
    CHECK(rmt::secular_mean(EnsembleSpec::lue(3, 1), 0) == Rational(1));
    CHECK(rmt::secular_mean(EnsembleSpec::gue(3), 4).is_zero());
    CHECK_THROWS_AS(rmt::secular_mean(EnsembleSpec::gue(3), -1), rmt::DomainError);
}

TEST_CASE("secular means against the explicit integral") {
    for (int N = 1; N <= 4; ++N) {
        for (const auto& spec : {EnsembleSpec::gue(N), EnsembleSpec::lue(N, Rational(1, 2)),
                                 EnsembleSpec::jue(N, 1, Rational(1, 3))}) {
            for (int r = 0; r <= N; ++r) {
                CHECK(rmt::secular_mean(spec, r) == rmt::oracle::secular_product(spec, Partition{r}));
            }
        }
    }
}

TEST_CASE("generating polynomial is the monic orthogonal polynomial") {
    for (int N = 1; N <= 12; ++N) {
        CHECK(rmt::secular_generating_check(EnsembleSpec::gue(N)).passed);
        CHECK(rmt::secular_generating_check(EnsembleSpec::lue(N, Rational(2, 3))).passed);
        CHECK(rmt::secular_generating_check(EnsembleSpec::jue(N, Rational(1, 2), 2)).passed);
    }
    CHECK_THROWS_AS(rmt::secular_generating_check(EnsembleSpec::gue(13)), rmt::DomainError);
}

TEST_CASE("LUE means are the absolute Laguerre coefficients") {
    for (int N = 1; N <= 10; ++N) {
        const Rational g(3, 7);
        const auto l = rmt::laguerre_monic(N, N, g);
        for (int j = 0; j <= N; ++j) {
            const Rational c = l.coefficient(static_cast<std::size_t>(N - j));
            CHECK(rmt::secular_mean(EnsembleSpec::lue(N, g), j) == (j % 2 == 0 ? c : -c));
        }
    }
}

TEST_CASE("column coefficients match the general expansion") {
    for (int N = 1; N <= 8; ++N) {
        for (int r = 0; r <= std::min(N, 8); ++r) {
            for (int j = 0; 2 * j <= r; ++j) {
                CHECK(rmt::psi_hermite_column(N, r, j) ==
                      rmt::psi(EnsembleSpec::gue(N), column(r), column(r - 2 * j), N));
            }
            for (int j = 0; j <= r; ++j) {
                const auto spec = EnsembleSpec::lue(N, Rational(1, 2));
                CHECK(rmt::psi_laguerre_column(N, spec.gamma, r, j) == rmt::psi(spec, column(r), column(j), N));
            }
        }
    }
}

TEST_CASE("constant-term coefficients match the general expansion") {
    for (int N = 1; N <= 5; ++N) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& mu : rmt::partitions_of(n)) {
                if (mu.length() > N) continue;
                CHECK(rmt::psi_hermite_to_constant(N, mu) == rmt::psi(EnsembleSpec::gue(N), mu, Partition(), N));
                const auto spec = EnsembleSpec::lue(N, Rational(5, 3));
                CHECK(rmt::psi_laguerre_to_constant(N, spec.gamma, mu) == rmt::psi(spec, mu, Partition(), N));
            }
        }
    }
}

TEST_CASE("pair moments") {
    CHECK(rmt::secular_pair_gue(2, 1, 1, rmt::PairClass::Even) == Rational(3, 4));
    CHECK(rmt::secular_pair_gue(5, 0, 0, rmt::PairClass::Even) == Rational(1));
    for (int N = 1; N <= 8; ++N) {
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 6; ++b) {
                if ((a + b) % 2 != 0) CHECK(rmt::secular_pair_gue(N, a, b).is_zero());
                if ((a + b) % 2 != 0) CHECK(rmt::secular_joint(EnsembleSpec::gue(N), Partition{std::max(a, b), std::min(a, b)}).is_zero());
                if ((a + b) % 2 == 0) {
                    CHECK(rmt::secular_pair_gue(N, a, b) ==
                          rmt::secular_joint(EnsembleSpec::gue(N), Partition{std::max(a, b), std::min(a, b)}));
                }
            }
        }
    }
}

TEST_CASE("joint moments against the explicit integral") {
    for (int N = 1; N <= 3; ++N) {
        for (int n = 0; n <= 5; ++n) {
            for (const auto& lambda : rmt::partitions_of(n)) {
                const auto g = EnsembleSpec::gue(N);
                const auto l = EnsembleSpec::lue(N, Rational(1, 2));
                const auto j = EnsembleSpec::jue(N, 1, 0);
                CHECK(rmt::secular_joint(g, lambda) == rmt::oracle::secular_product(g, lambda));
                CHECK(rmt::secular_joint(l, lambda) == rmt::oracle::secular_product(l, lambda));
                CHECK(rmt::secular_joint_expansion(j, lambda) == rmt::oracle::secular_product(j, lambda));
                CHECK(rmt::secular_joint_expansion(g, lambda) == rmt::secular_joint(g, lambda));
            }
        }
    }
    CHECK(rmt::secular_joint(EnsembleSpec::gue(2), Partition{2, 2}) == Rational(3, 4));
    CHECK_THROWS_AS(rmt::secular_joint(EnsembleSpec::jue(2, 0, 0), Partition{1}), rmt::DomainError);
}

TEST_CASE("single-part joint moment is the mean") {
    for (int N = 1; N <= 6; ++N) {
        for (int r = 0; r <= N + 1; ++r) {
            CHECK(rmt::secular_joint(EnsembleSpec::gue(N), Partition{r}) == rmt::secular_mean(EnsembleSpec::gue(N), r));
            const auto l = EnsembleSpec::lue(N, 2);
            CHECK(rmt::secular_joint(l, Partition{r}) == rmt::secular_mean(l, r));
        }
    }
}

TEST_CASE("elementary to Schur expansion") {
    // e_λ = Σ_μ K_{μ'λ} s_μ in 4 variables at random-ish rational points
    const std::vector<Rational> pts{Rational(1, 2), Rational(-2, 3), Rational(5, 7), Rational(3)};
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : rmt::partitions_of(n)) {
            Rational lhs(1);
            for (int part : lambda.parts()) {
                auto e = rmt::oracle::elementary(4, part);
                lhs *= e.evaluate(pts);
            }
            Rational rhs(0);
            for (const auto& mu : rmt::partitions_of(n)) {
                rhs += Rational(rmt::kostka(rmt::conjugate(mu), lambda)) * rmt::schur_eval(mu, pts);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("matching counts are integers") {
    for (int j = 1; j <= 4; ++j) {
        for (int N = 2 * j; N <= 12; ++N) {
            const Rational v = rmt::secular_mean(EnsembleSpec::gue(N), 2 * j) * Rational(N).pow(j);
            CHECK(v.denominator() == 1);
            CHECK(v.abs() > Rational(0));
        }
    }
}
