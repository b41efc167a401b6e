#pragma once

#include <span>
#include <vector>

#include "rmt/partition.hpp"
#include "rmt/rational.hpp"

namespace rmt {

/// Complete homogeneous symmetric polynomials h_0..h_maxDegree at `points`.
std::vector<Rational> complete_homogeneous(int maxDegree, std::span<const Rational> points);

/// S_λ by the bialternant det[x_k^{λ_j+n-j}] / det[x_k^{n-j}]. Requires
/// pairwise distinct points (DomainError otherwise).
Rational schur_bialternant(const Partition& lambda, std::span<const Rational> points);

/// S_λ = det[h_{λ_i - i + j}] (Jacobi–Trudi); division-free, valid for
/// coincident points.
Rational schur_jacobi_trudi(const Partition& lambda, std::span<const Rational> points);

/// S_λ(points): bialternant for distinct points, Jacobi–Trudi otherwise.
/// Returns 0 when l(λ) exceeds the number of points.
Rational schur_eval(const Partition& lambda, std::span<const Rational> points);

/// C_λ(n) = Π_j (λ_j + n - j)! / (n - j)! = Π over boxes (n + content).
/// Vanishes when l(λ) > n.
Integer c_lambda(const Partition& lambda, int n);

/// Every ν ⊆ λ, in decreasing lexicographic order.
std::vector<Partition> subpartitions(const Partition& lambda);

bool pairwise_distinct(std::span<const Rational> points);

}  // namespace rmt
