#include "rmt/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

Integer dim_V(const Partition& lambda) {
    const int l = lambda.length();
    Integer num = factorial(lambda.weight());
    Integer den = 1;
    for (int j = 0; j < l; ++j) {
        for (int k = j + 1; k < l; ++k) {
            num *= lambda[static_cast<std::size_t>(j)] - lambda[static_cast<std::size_t>(k)] - j + k;
        }
        den *= factorial(lambda[static_cast<std::size_t>(j)] + l - 1 - j);
    }
    return num / den;
}

namespace {

// Peel the last letter of the content off the tableau: the cells holding it
// form a horizontal strip λ/ν of that size.
Integer kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t letters,
                   std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (letters == 0) {
        return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? Integer(1) : Integer(0);
    }
    const auto key = std::make_pair(shape, letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = content[letters - 1];
    Integer total = 0;
    std::vector<int> inner = shape;
    // Row i can lose between 0 and shape[i] - shape[i+1] cells.
    const auto recurse = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == shape.size()) {
            if (remaining == 0) total += kostka_rec(inner, content, letters - 1, memo);
            return;
        }
        const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
        const int max_take = std::min(remaining, shape[row] - below);
        for (int take = 0; take <= max_take; ++take) {
            inner[row] = shape[row] - take;
            self(self, row + 1, remaining - take);
        }
        inner[row] = shape[row];
    };
    recurse(recurse, 0, strip);
    memo.emplace(key, total);
    return total;
}

struct CharacterCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> values;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

// Beta-set form: removing a border strip of length r replaces some bead b by
// b - r (when that position is free); the sign counts beads jumped over.
Integer mn_rec(const std::vector<int>& mu, const std::vector<int>& rho) {
    if (rho.empty()) return mu.empty() ? Integer(1) : Integer(0);

    auto& cache = character_cache();
    const auto key = std::make_pair(mu, rho);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
    }

    const int r = rho.front();
    const std::vector<int> rest(rho.begin() + 1, rho.end());
    const int l = static_cast<int>(mu.size());
    std::vector<int> beta(mu.size());
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] + l - 1 - i;

    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++jumped;
        }
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller(moved.size());
        for (int k = 0; k < l; ++k) {
            smaller[static_cast<std::size_t>(k)] = moved[static_cast<std::size_t>(k)] - (l - 1 - k);
        }
        while (!smaller.empty() && smaller.back() == 0) smaller.pop_back();
        const Integer sub = mn_rec(smaller, rest);
        if (jumped % 2 == 0) total += sub;
        else total -= sub;
    }

    std::unique_lock lock(cache.mutex);
    cache.values.emplace(key, total);
    return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    return kostka_rec(lambda.parts(), mu.parts(), mu.parts().size(), memo);
}

Integer character(const Partition& mu, const Partition& rho) {
    if (mu.weight() != rho.weight()) {
        throw DomainError("character: |" + mu.str() + "| != |" + rho.str() + "|");
    }
    return mn_rec(mu.parts(), rho.parts());
}

Integer centralizer_order(const Partition& rho) {
    Integer z = 1;
    std::map<int, int> multiplicity;
    for (int part : rho.parts()) ++multiplicity[part];
    for (const auto& [part, m] : multiplicity) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= power * factorial(m);
    }
    return z;
}

}  // namespace rmt
