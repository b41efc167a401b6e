#pragma once

#include <string>

#include "rmt/ensemble.hpp"
#include "rmt/partition.hpp"
#include "rmt/polynomial.hpp"
#include "rmt/rational.hpp"

namespace rmt {

// sc_j(M) is the j-th elementary symmetric polynomial of the eigenvalues,
// det(t - M) = Σ_j (-1)^j sc_j(M) t^{N-j}. sc_j = 0 for j > N.

/// E[sc_r]. GUE and LUE from closed forms, JUE from Ψ^(J)_{(1^r),∅}.
/// DomainError for r < 0.
Rational secular_mean(const EnsembleSpec& spec, int r);

/// Coefficient of the multivariate Hermite polynomial H_{(1^{r-2j})} in e_r.
Rational psi_hermite_column(int N, int r, int j);
/// Coefficient of the multivariate Laguerre polynomial L_{(1^j)} in e_r.
Rational psi_laguerre_column(int N, const Rational& gamma, int r, int j);

enum class PairClass { Even, Odd };

/// GUE E[sc_{2r} sc_{2s}] (Even) or E[sc_{2r+1} sc_{2s+1}] (Odd).
Rational secular_pair_gue(int N, int r, int s, PairClass cls);
/// GUE E[sc_a sc_b] for arbitrary indices; zero for mixed parity.
Rational secular_pair_gue(int N, int a, int b);

/// E[Π_j sc_{λ_j}] = Σ_μ K_{μ'λ} Ψ_{μ,∅} with closed-form Ψ_{μ,∅}. GUE and LUE only;
/// DomainError for JUE, where no such formula is available.
Rational secular_joint(const EnsembleSpec& spec, const Partition& lambda);

/// Same expectation through e_λ = Σ_μ K_{μ'λ} s_μ and the general
/// Ψ_{μ,∅} of the expansions module. Works for all three ensembles.
Rational secular_joint_expansion(const EnsembleSpec& spec, const Partition& lambda);

/// Ψ^(H)_{μ,∅} = (2N)^{-|μ|/2} / (|μ|/2)! χ^μ_{(2^{|μ|/2})} C_μ(N), zero for odd |μ|.
Rational psi_hermite_to_constant(int N, const Partition& mu);
/// Ψ^(L)_{μ,∅} = (2N)^{-|μ|} Π_boxes (N+γ+c)(N+c) χ^μ_{(1^n)} / n!.
Rational psi_laguerre_to_constant(int N, const Rational& gamma, const Partition& mu);

struct GeneratingReport {
    EnsembleSpec spec;
    Polynomial generated;  // Σ_j (-1)^j E[sc_j] t^{N-j}
    Polynomial monic;      // degree-N monic orthogonal polynomial
    bool passed = false;
};

/// Checks that the secular means generate the monic orthogonal polynomial.
/// DomainError for N > 12.
GeneratingReport secular_generating_check(const EnsembleSpec& spec);

}  // namespace rmt
