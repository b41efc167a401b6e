#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/partition.hpp"
#include "rmt/symmetric_group.hpp"
#include "rmt_oracle/oracles.hpp"

using rmt::Integer;
using rmt::Partition;

TEST_CASE("dim_V") {
    CHECK(rmt::dim_V(Partition{1, 1, 1, 1}) == 1);
    CHECK(rmt::dim_V(Partition{5}) == 1);
    CHECK(rmt::dim_V(Partition{2, 1}) == 2);
    for (int n = 0; n <= 8; ++n) {
        Integer total = 0;
        for (const auto& lam : rmt::partitions_of(n)) {
            const Integer d = rmt::dim_V(lam);
            CHECK(d == rmt::oracle::standard_tableaux(lam));
            total += d * d;
        }
        CHECK(total == rmt::factorial(n));
    }
}

TEST_CASE("kostka") {
    CHECK(rmt::kostka(Partition{3, 1}, Partition{3, 1}) == 1);
    CHECK(rmt::kostka(Partition{1, 1}, Partition{2}) == 0);
    CHECK(rmt::kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(rmt::kostka(Partition{2, 1}, Partition{2}) == 0);
    for (int n = 1; n <= 8; ++n) {
        const auto parts = rmt::partitions_of(n);
        for (const auto& lam : parts) {
            for (const auto& mu : parts) {
                const Integer k = rmt::kostka(lam, mu);
                CHECK((k > 0) == rmt::dominates(lam, mu));
                if (n <= 6) CHECK(k == rmt::oracle::kostka_tableaux(lam, mu));
            }
        }
    }
}

TEST_CASE("characters") {
    CHECK(rmt::character(Partition{2}, Partition{2}) == 1);
    CHECK(rmt::character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(rmt::character(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(rmt::character(Partition{2}, Partition{1}), rmt::DomainError);
    for (int n = 1; n <= 6; ++n) {
        const auto parts = rmt::partitions_of(n);
        for (const auto& mu : parts) CHECK(rmt::character(mu, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == rmt::dim_V(mu));
        for (const auto& mu : parts) {
            for (const auto& rho : parts) CHECK(rmt::character(mu, rho) == rmt::oracle::character_frobenius(mu, rho));
        }
        for (const auto& rho : parts) {
            for (const auto& sigma : parts) {
                Integer s = 0;
                for (const auto& lam : parts) s += rmt::character(lam, rho) * rmt::character(lam, sigma);
                CHECK(s == (rho == sigma ? rmt::centralizer_order(rho) : Integer(0)));
            }
        }
    }
}

TEST_CASE("characters against a sum over all permutations") {
    for (int n = 1; n <= 5; ++n) {
        const auto sizes = rmt::oracle::class_sizes(n);
        const auto parts = rmt::partitions_of(n);
        for (const auto& [rho, count] : sizes) CHECK(rmt::centralizer_order(rho) * count == rmt::factorial(n));
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                Integer s = 0;
                for (const auto& [rho, count] : sizes) s += rmt::character(a, rho) * rmt::character(b, rho) * count;
                CHECK(s == (a == b ? rmt::factorial(n) : Integer(0)));
            }
        }
    }
}
