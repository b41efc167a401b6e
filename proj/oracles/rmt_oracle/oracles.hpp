#pragma once
// Reference computations by brute force: explicit polynomial expansion,
// enumeration of tableaux and permutations, cofactor expansion, quadrature.
// They are slow and only meant for small sizes.

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/matrix.hpp"
#include "rmt/partition.hpp"
#include "rmt/polynomial.hpp"
#include "rmt/rational.hpp"

namespace rmt::oracle {

/// Sparse polynomial in a fixed number of variables.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nVars = 0) : nVars_(nVars) {}
    static MultiPoly constant(int nVars, const Rational& c);
    static MultiPoly variable(int nVars, int index);

    int n_vars() const { return nVars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);
    Rational evaluate(std::span<const Rational> points) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    int nVars_;
    std::map<Exponents, Rational> terms_;
};

/// Π_{i<j} (x_i - x_j).
MultiPoly vandermonde(int nVars);
/// Elementary symmetric polynomial e_k.
MultiPoly elementary(int nVars, int k);
/// Schur polynomial as a sum over semistandard tableaux.
MultiPoly schur_tableaux(const Partition& lambda, int nVars);

/// ∫ x^k w(x) dx in the ensemble's unit, from the closed-form Gaussian,
/// Gamma and Beta integrals.
Rational weight_moment(const EnsembleSpec& spec, int k);

/// E[f(x_1..x_n)] under the density ∝ Δ(x)^2 Π w(x_i) on n = f.n_vars()
/// variables (n <= 5), with w the weight of `spec` (its N sets the scale
/// only), by expanding f Δ^2 into monomials.
Rational expectation(const EnsembleSpec& spec, const MultiPoly& f);

/// E[Π_j det(t_j - M)] by explicit expansion.
Rational correlation(const EnsembleSpec& spec, std::span<const Rational> points);

/// E[Π_j e_{λ_j}(eigenvalues)] by explicit expansion.
Rational secular_product(const EnsembleSpec& spec, const Partition& lambda);

/// Number of semistandard tableaux of shape λ and content μ.
long kostka_tableaux(const Partition& lambda, const Partition& mu);
/// Number of standard tableaux of shape λ.
long standard_tableaux(const Partition& lambda);

/// χ^λ_ρ from the Frobenius formula: coefficient of x^{λ+δ} in a_δ · p_ρ.
Integer character_frobenius(const Partition& lambda, const Partition& rho);

/// Cycle type of a permutation of {0..n-1}.
Partition cycle_type(const std::vector<int>& perm);
/// Number of permutations of each cycle type, by running over all of S_n.
std::map<Partition, long> class_sizes(int n);

/// Determinant by cofactor expansion along the first row.
Rational det_cofactor(const Matrix& m);

/// Monic Hermite polynomials for weight exp(-N x^2/2) straight from the
/// three-term recurrence.
std::vector<Polynomial> hermite_by_recurrence(int maxDegree, int N);

/// Σ_{k<N} N^k h_k(x) h_k(y) / k!, the GUE kernel with the factor
/// sqrt(N/2π) exp(-N(x²+y²)/4) stripped.
Rational gue_kernel(int N, const Rational& x, const Rational& y);

/// E[det(t - M)^power] for GUE by a tensor trapezoid rule over the N
/// eigenvalues (N <= 3), in double precision.
double gue_moment_quadrature(int N, int power, double t, int nodes = 401, double half_width = 9.0);

}  // namespace rmt::oracle
