#pragma once

#include "rmt/partition.hpp"
#include "rmt/rational.hpp"

namespace rmt {

/// Dimension of the irreducible S_n representation V_λ, from
/// |λ|! Π_{j<k}(λ_j - λ_k - j + k) / Π_j (λ_j + l - j)!.
Integer dim_V(const Partition& lambda);

/// Kostka number K_{λμ}: semistandard tableaux of shape λ and content μ.
/// Zero when the weights differ. μ may be any composition, given as a
/// partition.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Character χ^μ evaluated on the conjugacy class of cycle type ρ, by the
/// Murnaghan–Nakayama rule with memoization. Throws DomainError when
/// |μ| != |ρ|.
Integer character(const Partition& mu, const Partition& rho);

/// Order of the centralizer of a permutation of cycle type ρ,
/// Π_i i^{m_i} m_i!.
Integer centralizer_order(const Partition& rho);

}  // namespace rmt
