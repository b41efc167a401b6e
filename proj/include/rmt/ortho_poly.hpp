#pragma once

// Monic orthogonal polynomials for the three ensemble weights.
//
// Hermite convention: the classical H_n here are the *probabilists'*
// polynomials, orthogonal for exp(-x^2/2) with ∫ H_j H_k e^{-x²/2} dx =
// sqrt(2π) j! δ_jk, i.e. H_{n+1} = x H_n - n H_{n-1}. They are NOT the
// physicists' polynomials (weight exp(-x^2)). The ensemble polynomials are
// h_n(x) = N^{-n/2} H_n(sqrt(N) x), monic and orthogonal for exp(-N x²/2).
//
// Laguerre: l_n(x) = (-1)^n n! (2N)^{-n} L_n^{(γ)}(2N x), weight x^γ e^{-2Nx}.
// Jacobi:   j_n is the monic multiple of P_n^{(γ1,γ2)}(1 - 2x), weight
//           x^γ1 (1-x)^γ2 on [0, 1].

#include <string>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/polynomial.hpp"

namespace rmt {

/// h_n for the weight exp(-N x²/2); follows h_{n+1} = x h_n - (n/N) h_{n-1}.
Polynomial hermite_monic(int n, int N);

/// l_n^{(γ)} for the weight x^γ exp(-2N x).
Polynomial laguerre_monic(int n, int N, const Rational& gamma);

/// j_n^{(γ1,γ2)} for the weight x^γ1 (1-x)^γ2 on [0, 1].
Polynomial jacobi_monic(int n, const Rational& gamma1, const Rational& gamma2);

/// The monic polynomial of degree n for the ensemble's weight.
Polynomial monic_polynomial(const EnsembleSpec& spec, int n);

/// Exact moments ∫ x^k w(x) dx of an ensemble weight, expressed as a
/// rational multiple of a fixed per-ensemble transcendental unit:
///   GUE  unit sqrt(2π/N),            moment_k = (k-1)!! / N^{k/2} (k even)
///   LUE  unit Γ(γ+1) / (2N)^{γ+1},   moment_k = (γ+1)_k / (2N)^k
///   JUE  unit B(γ1+1, γ2+1),         moment_k = (γ1+1)_k / (γ1+γ2+2)_k
class WeightMomentFunctional {
public:
    explicit WeightMomentFunctional(EnsembleSpec spec);

    Rational moment(int k) const;
    /// ∫ f g w, in units.
    Rational inner(const Polynomial& f, const Polynomial& g) const;
    /// ∫ f w, in units.
    Rational integrate(const Polynomial& f) const;
    std::string unit() const;

private:
    EnsembleSpec spec_;
    mutable std::vector<Rational> cache_;
};

/// ⟨φ_n, φ_n⟩ in units of WeightMomentFunctional::unit(), derived from the
/// classical normalizations by the change of variables in the monic
/// definitions (no moment integration involved).
Rational monic_norm(const EnsembleSpec& spec, int n);

struct OrthogonalityReport {
    int n_max = 0;
    std::string unit;
    std::vector<std::vector<Rational>> gram;  // ⟨φ_i, φ_j⟩ in units
    std::vector<Rational> expected_norms;
    bool orthogonal = false;    // every off-diagonal entry is exactly zero
    bool norms_match = false;   // diagonal equals expected_norms exactly
    bool ok() const { return orthogonal && norms_match; }
};

/// Gram matrix of φ_0..φ_{n_max} under the exact moment functional.
OrthogonalityReport check_orthogonality(const EnsembleSpec& spec, int n_max);

}  // namespace rmt
