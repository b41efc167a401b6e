#include <random>
#include <set>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/partition.hpp"
#include "rmt/rational.hpp"

using rmt::Partition;

TEST_CASE("partition normalization") {
    CHECK(Partition{4, 2} == Partition{4, 2, 0, 0});
    CHECK(Partition{4, 2}.length() == 2);
    CHECK(Partition{4, 2}.weight() == 6);
    CHECK(Partition{4, 2}.str() == "(4,2)");
    CHECK(Partition{}.json() == "[]");
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, -1});
    CHECK(rmt::parse_partition("[3,1,1]") == Partition{3, 1, 1});
    CHECK(rmt::parse_partition("(2,2)") == Partition{2, 2});
    CHECK(rmt::parse_partition("") == Partition{});
}

TEST_CASE("conjugate") {
    CHECK(rmt::conjugate(Partition{4, 2}) == Partition{2, 2, 1, 1});
    CHECK(rmt::conjugate(Partition{}) == Partition{});
    CHECK(rmt::conjugate(Partition{3}) == Partition{1, 1, 1});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<int> step(0, 3);
    for (int rep = 0; rep < 1000; ++rep) {
        std::vector<int> parts;
        int total = 0;
        int current = 1 + step(rng);
        for (int i = len(rng); i > 0 && total + current <= 30; --i) {
            parts.insert(parts.begin(), current);
            total += current;
            current += step(rng);
        }
        const Partition lam(parts);
        const Partition c = rmt::conjugate(lam);
        CHECK(rmt::conjugate(c) == lam);
        CHECK(c.weight() == lam.weight());
    }
}

TEST_CASE("tilde") {
    CHECK(rmt::tilde(Partition::rectangle(3, 2), 3, 2) == Partition{});
    CHECK(rmt::tilde(Partition{}, 3, 2) == Partition::rectangle(2, 3));
    CHECK(rmt::tilde(Partition{1}, 2, 2) == Partition{2, 1});
    CHECK_THROWS_AS(rmt::tilde(Partition{3}, 2, 2), rmt::DomainError);
    for (const auto& lam : rmt::partitions_in_box(3, 4)) {
        const Partition t = rmt::tilde(lam, 3, 4);
        CHECK(t.fits_in_box(4, 3));
        CHECK(rmt::tilde(t, 4, 3) == lam);
        CHECK(t.weight() == 12 - lam.weight());
    }
}

TEST_CASE("box enumeration") {
    CHECK(rmt::partitions_in_box(1, 1).collect() == std::vector<Partition>{Partition{1}, Partition{}});
    CHECK(rmt::partitions_in_box(2, 2).collect().size() == 6);
    const auto even = rmt::partitions_in_box(2, 2, rmt::BoxFilter::even()).collect();
    CHECK(std::set<Partition>(even.begin(), even.end()) ==
          std::set<Partition>{Partition{}, Partition{2}, Partition{1, 1}, Partition{2, 2}});
    for (int n = 0; n <= 5; ++n) {
        for (int p = 0; p <= 5; ++p) {
            const auto all = rmt::partitions_in_box(n, p).collect();
            CHECK(all.size() == rmt::binomial(n + p, p).get_ui());
            CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
            for (int w = 0; w <= n * p; ++w) {
                std::size_t expected = 0;
                for (const auto& lam : all) expected += lam.weight() == w;
                CHECK(rmt::partitions_in_box(n, p, rmt::BoxFilter::fixed(w)).collect().size() == expected);
            }
        }
    }
}

TEST_CASE("partitions of n") {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(rmt::partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
    CHECK(rmt::partitions_of(4).front() == Partition{4});
    CHECK(rmt::partitions_of(4).back() == Partition{1, 1, 1, 1});
}

TEST_CASE("dominance") {
    CHECK(rmt::dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK(!rmt::dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(!rmt::dominates(Partition{3}, Partition{2}));
}
