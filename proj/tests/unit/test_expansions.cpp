#include <random>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/moments.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt/symmetric_group.hpp"
#include "rmt_oracle/oracles.hpp"

using rmt::EnsembleSpec;
using rmt::Partition;
using rmt::Rational;

namespace {

std::vector<EnsembleSpec> sample_specs(int N) {
    return {EnsembleSpec::gue(N), EnsembleSpec::lue(N, Rational(1, 2)), EnsembleSpec::jue(N, 0, 0),
            EnsembleSpec::jue(N, Rational(1, 2), Rational(2, 3))};
}

std::vector<Rational> distinct_points(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    while (true) {
        std::vector<Rational> pts;
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(num(rng), den(rng));
        if (rmt::pairwise_distinct(pts)) return pts;
    }
}

// Φ_λ in n variables as an explicit polynomial.
rmt::oracle::MultiPoly phi_poly(const EnsembleSpec& spec, const Partition& lambda, int n) {
    rmt::oracle::MultiPoly out(n);
    for (const auto& nu : rmt::subpartitions(lambda)) {
        out += rmt::oracle::schur_tableaux(nu, n) * rmt::upsilon(spec, lambda, nu, n);
    }
    return out;
}

}  // namespace

TEST_CASE("D determinants") {
    CHECK(rmt::d_matrix(rmt::DFamily::Hermite, Partition{}, Partition{}) == Rational(1));
    CHECK(rmt::d_matrix(rmt::DFamily::Laguerre, Partition{3, 1}, Partition{3, 1}) == Rational(1));
    for (int N = 1; N <= 7; ++N) {
        for (int p = 1; p <= 3; ++p) {
            const Partition box = Partition::rectangle(N, 2 * p);
            CHECK(rmt::d_matrix(rmt::DFamily::Hermite, box, Partition{}) == rmt::d_box(N, p));
        }
    }
    CHECK(rmt::d_matrix(rmt::DFamily::Hermite, Partition::rectangle(4, 2), Partition{1, 1, 1, 1}).is_zero());
    CHECK(rmt::d_matrix(rmt::DFamily::Laguerre, Partition{2}, Partition{1, 1}).is_zero());
    // N = 2m, ν = (1,1): -m p D_e
    const int m = 3;
    for (int p = 1; p <= 3; ++p) {
        CHECK(rmt::d_matrix(rmt::DFamily::Hermite, Partition::rectangle(2 * m, 2 * p), Partition{1, 1}) ==
              Rational(-m * p) * rmt::d_even(m, p));
    }
}

TEST_CASE("unitriangularity and support") {
    for (const auto& spec : sample_specs(3)) {
        for (const auto& lam : rmt::partitions_in_box(3, 3)) {
            CHECK(rmt::psi(spec, lam, lam, 3) == Rational(1));
            CHECK(rmt::upsilon(spec, lam, lam, 3) == Rational(1));
            for (const auto& nu : rmt::partitions_in_box(3, 3)) {
                if (!lam.contains(nu)) {
                    CHECK(rmt::psi(spec, lam, nu, 3).is_zero());
                    CHECK(rmt::upsilon(spec, lam, nu, 3).is_zero());
                } else if (spec.kind == rmt::Family::Hermite && (lam.weight() - nu.weight()) % 2 != 0) {
                    CHECK(rmt::psi(spec, lam, nu, 3).is_zero());
                }
            }
        }
    }
    CHECK_THROWS_AS(rmt::psi(EnsembleSpec::gue(2), Partition{1, 1, 1}, Partition{}, 2), rmt::DomainError);
}

TEST_CASE("Hermite coefficients in closed form") {
    const int N = 8;
    const auto spec = EnsembleSpec::gue(N);
    for (int r = 0; r <= 4; ++r) {
        for (int j = 0; j <= r; ++j) {
            const Partition lam(std::vector<int>(static_cast<std::size_t>(2 * r), 1));
            const Partition nu(std::vector<int>(static_cast<std::size_t>(2 * j), 1));
            const Rational sign = (r - j) % 2 == 0 ? Rational(1) : Rational(-1);
            const Rational expected = sign / (Rational(2 * N).pow(r - j) * Rational(rmt::factorial(r - j))) *
                                      Rational(rmt::factorial(N - 2 * j)) / Rational(rmt::factorial(N - 2 * r));
            CHECK(rmt::psi(spec, lam, nu, N) == expected);
        }
    }
    for (int w = 0; w <= 8; w += 2) {
        for (const auto& mu : rmt::partitions_of(w)) {
            if (mu.length() > N) continue;
            const int k = w / 2;
            const Partition dominoes(std::vector<int>(static_cast<std::size_t>(k), 2));
            const Rational expected = Rational(2 * N).inverse().pow(k) / Rational(rmt::factorial(k)) *
                                      Rational(rmt::character(mu, dominoes)) * Rational(rmt::c_lambda(mu, N));
            CHECK(rmt::psi(spec, mu, Partition{}, N) == expected);
        }
    }
}

TEST_CASE("psi and upsilon are inverse") {
    for (const auto& spec : sample_specs(2)) {
        const auto box = rmt::partitions_in_box(3, 3).collect();
        for (const auto& lam : box) {
            for (const auto& nu : box) {
                Rational s(0);
                for (const auto& mu : box) s += rmt::psi(spec, lam, mu, 3) * rmt::upsilon(spec, mu, nu, 3);
                CHECK(s == Rational(lam == nu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("phi examples") {
    const auto spec = EnsembleSpec::gue(3);
    const std::vector<Rational> pts{1, Rational(2, 3), -2};
    CHECK(rmt::phi_eval(spec, Partition{}, pts) == Rational(1));
    CHECK(rmt::phi_eval(spec, Partition{1}, pts) == Rational(-1, 3));
    const std::vector<Rational> one{Rational(5, 7)};
    CHECK(rmt::phi_eval(spec, Partition{2}, one) == rmt::hermite_monic(2, 3)(one[0]));
    for (const auto& s : sample_specs(4)) {
        for (int k = 0; k <= 6; ++k) CHECK(rmt::phi_eval(s, Partition{k}, one) == rmt::monic_polynomial(s, k)(one[0]));
    }
}

TEST_CASE("phi by the Schur basis equals the determinant ratio") {
    std::mt19937 rng(17);
    for (int N = 1; N <= 3; ++N) {
        for (int p = 1; p <= 3; ++p) {
            for (const auto& spec : sample_specs(N)) {
                const auto pts = distinct_points(rng, static_cast<std::size_t>(p));
                for (const auto& lam : rmt::partitions_in_box(N, p)) {
                    CHECK(rmt::phi_eval(spec, lam, pts) == rmt::phi_eval_determinant(spec, lam, pts));
                }
            }
        }
    }
    CHECK_THROWS_AS(rmt::phi_eval_determinant(EnsembleSpec::gue(2), Partition{1}, std::vector<Rational>{1, 1}),
                    rmt::DomainError);
}

TEST_CASE("dual Cauchy identities") {
    std::mt19937 rng(29);
    for (int N = 1; N <= 3; ++N) {
        for (int p = 1; p <= 3; ++p) {
            const auto t = distinct_points(rng, static_cast<std::size_t>(p));
            const auto x = distinct_points(rng, static_cast<std::size_t>(N));
            Rational lhs(1);
            for (const auto& ti : t) {
                for (const auto& xj : x) lhs *= ti - xj;
            }
            Rational schur(0);
            for (const auto& lam : rmt::partitions_in_box(N, p)) {
                const Partition lt = rmt::tilde(lam, N, p);
                const Rational sign = lt.weight() % 2 == 0 ? Rational(1) : Rational(-1);
                schur += sign * rmt::schur_eval(lam, t) * rmt::schur_eval(lt, x);
            }
            CHECK(schur == lhs);
            for (const auto& spec : sample_specs(N)) {
                Rational gen(0);
                for (const auto& lam : rmt::partitions_in_box(N, p)) {
                    const Partition lt = rmt::tilde(lam, N, p);
                    const Rational sign = lt.weight() % 2 == 0 ? Rational(1) : Rational(-1);
                    gen += sign * rmt::phi_eval(spec, lam, t) * rmt::phi_eval(spec, lt, x);
                }
                CHECK(gen == lhs);
            }
        }
    }
}

TEST_CASE("multivariate orthogonality in two variables") {
    const int n = 2;
    const int N = 3;
    std::vector<Partition> small;
    for (const auto& mu : rmt::partitions_in_box(2, 2)) {
        if (mu.weight() <= 2) small.push_back(mu);
    }
    const auto gue = EnsembleSpec::gue(N);
    const Rational g(1, 2);
    const auto lue = EnsembleSpec::lue(N, g);
    for (const auto& mu : small) {
        for (const auto& nu : small) {
            const Rational h = rmt::oracle::expectation(gue, phi_poly(gue, mu, n) * phi_poly(gue, nu, n));
            const Rational l = rmt::oracle::expectation(lue, phi_poly(lue, mu, n) * phi_poly(lue, nu, n));
            if (mu == nu) {
                // Averages are normalized by the n-variable partition function,
                // matching the left-hand sides of the orthogonality relations.
                CHECK(h == Rational(rmt::c_lambda(mu, n)) / Rational(N).pow(mu.weight()));
                CHECK(l == Rational(rmt::c_lambda(mu, n)) * rmt::g_ratio(mu, Partition{}, n, g) /
                               Rational(2 * N).pow(2 * mu.weight()));
            } else {
                CHECK(h.is_zero());
                CHECK(l.is_zero());
            }
        }
    }
}

TEST_CASE("expansion table") {
    auto table = rmt::expansion_table(EnsembleSpec::lue(2, Rational(1, 2)), rmt::Direction::Psi, 2);
    CHECK(table == rmt::expansion_table(EnsembleSpec::lue(2, Rational(1, 2)), rmt::Direction::Psi, 2));
    CHECK(table->at(Partition{1}, Partition{}) == rmt::psi(table->spec(), Partition{1}, Partition{}, 2));
    const auto entries = table->slice(2, 2);
    for (const auto& e : entries) CHECK(e.value == rmt::psi(table->spec(), e.lambda, e.nu, 2));
    const std::string csv = table->csv(1, 1);
    CHECK(csv.rfind("lambda,nu,value\n", 0) == 0);
    CHECK(csv.find("\"[1]\",\"[1]\",1\n") != std::string::npos);
}
