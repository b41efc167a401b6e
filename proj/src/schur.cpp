#include "rmt/schur.hpp"

#include <algorithm>

#include "rmt/errors.hpp"
#include "rmt/matrix.hpp"

namespace rmt {

std::vector<Rational> complete_homogeneous(int maxDegree, std::span<const Rational> points) {
    std::vector<Rational> h(static_cast<std::size_t>(std::max(maxDegree, 0)) + 1);
    h[0] = Rational(1);
    // Adding one variable x: h_k <- h_k + x h_{k-1}, in increasing k.
    for (const Rational& x : points) {
        for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
    }
    return h;
}

bool pairwise_distinct(std::span<const Rational> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) return false;
        }
    }
    return true;
}

Rational schur_bialternant(const Partition& lambda, std::span<const Rational> points) {
    const std::size_t n = points.size();
    if (static_cast<std::size_t>(lambda.length()) > n) return Rational(0);
    if (!pairwise_distinct(points)) throw DomainError("bialternant needs pairwise distinct points");
    Matrix num(n, n);
    Rational vandermonde(1);
    for (std::size_t j = 0; j < n; ++j) {
        const long e = lambda[j] + static_cast<long>(n - 1 - j);
        for (std::size_t k = 0; k < n; ++k) num(j, k) = points[k].pow(e);
        for (std::size_t k = j + 1; k < n; ++k) vandermonde *= points[j] - points[k];
    }
    return det_exact(num) / vandermonde;
}

Rational schur_jacobi_trudi(const Partition& lambda, std::span<const Rational> points) {
    const std::size_t l = static_cast<std::size_t>(lambda.length());
    if (l > points.size()) return Rational(0);
    if (l == 0) return Rational(1);
    const auto h = complete_homogeneous(lambda[0] + static_cast<int>(l), points);
    Matrix m(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            const long k = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
            if (k >= 0) m(i, j) = h[static_cast<std::size_t>(k)];
        }
    }
    return det_exact(m);
}

Rational schur_eval(const Partition& lambda, std::span<const Rational> points) {
    if (static_cast<std::size_t>(lambda.length()) > points.size()) return Rational(0);
    if (pairwise_distinct(points)) return schur_bialternant(lambda, points);
    return schur_jacobi_trudi(lambda, points);
}

Integer c_lambda(const Partition& lambda, int n) {
    Integer c = 1;
    for (int row = 0; row < lambda.length(); ++row) {
        for (int col = 0; col < lambda[static_cast<std::size_t>(row)]; ++col) {
            c *= n + col - row;
            if (c == 0) return c;
        }
    }
    return c;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    if (lambda.empty()) {
        out.emplace_back();
        return out;
    }
    for (const auto& nu : partitions_in_box(lambda[0], lambda.length())) {
        if (lambda.contains(nu)) out.push_back(nu);
    }
    return out;
}

}  // namespace rmt
