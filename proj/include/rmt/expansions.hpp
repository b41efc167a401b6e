#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/partition.hpp"
#include "rmt/rational.hpp"

namespace rmt {

enum class DFamily { Hermite, Laguerre, Jacobi, JacobiTilde };

/// Parameters of the Jacobi D determinants. Unused for Hermite/Laguerre.
struct DParams {
    int nVars = 0;
    Rational s;  // γ1 + γ2
};

/// D_{λν} for the given family, an exact determinant of size l(λ) (Hermite,
/// Laguerre) or nVars (Jacobi):
///   Hermite      entries 1/((d/2)!) for d >= 0 even, else 0
///   Laguerre     entries 1/d! for d >= 0, else 0
/// with d = λ_j - ν_k - j + k. The Jacobi kinds are returned with their
/// Gamma factors divided out so they stay rational:
///   Jacobi       Π_k Γ(a_k) · D,      a_k = 2ν_k + 2n - 2k + s + 2,
///                entries 1/(d! (a_k)_d)
///   JacobiTilde  D̃ / Π_j Γ(c_j),      c_j = 2λ_j + 2n - 2j + s + 1,
///                entries 1/(d! (c_j - d)_d)
/// JacobiTilde throws DomainError when some (c_j - d)_d vanishes.
/// Hermite and Laguerre give 0 when l(ν) > l(λ).
Rational d_matrix(DFamily family, const Partition& lambda, const Partition& nu,
                  const DParams& params = {});

/// G_λ(n, shift) / G_ν(n, shift) = Π_j (ν_j + n - j + shift + 1)_{λ_j - ν_j}
/// for ν ⊆ λ.
Rational g_ratio(const Partition& lambda, const Partition& nu, int n, const Rational& shift);

/// Coefficient of Φ_ν in S_λ (n variables). Zero unless ν ⊆ λ.
/// Requires l(λ) <= nVars (DomainError otherwise).
Rational psi(const EnsembleSpec& spec, const Partition& lambda, const Partition& nu, int nVars);

/// Coefficient of S_ν in Φ_λ (n variables). Zero unless ν ⊆ λ.
Rational upsilon(const EnsembleSpec& spec, const Partition& lambda, const Partition& nu,
                 int nVars);

enum class Direction { Psi, Upsilon };

std::string direction_name(Direction d);

/// Lazily filled, thread-safe memo of Ψ or Υ coefficients for one ensemble
/// weight and one number of variables.
class ExpansionTable {
public:
    ExpansionTable(EnsembleSpec spec, Direction direction, int nVars);

    const EnsembleSpec& spec() const { return spec_; }
    Direction direction() const { return direction_; }
    int n_vars() const { return nVars_; }

    Rational at(const Partition& lambda, const Partition& nu) const;

    struct Entry {
        Partition lambda;
        Partition nu;
        Rational value;
    };
    /// Every non-zero entry with ν ⊆ λ ⊆ (boxN^boxP), λ in decreasing order.
    std::vector<Entry> slice(int boxN, int boxP) const;
    /// The slice as CSV with header "lambda,nu,value".
    std::string csv(int boxN, int boxP) const;

    std::size_t cached() const;

private:
    EnsembleSpec spec_;
    Direction direction_;
    int nVars_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<Partition, Partition>, Rational> memo_;
};

/// Shared table for (spec, direction, nVars); the same object is returned for
/// repeated requests.
std::shared_ptr<ExpansionTable> expansion_table(const EnsembleSpec& spec, Direction direction,
                                                int nVars);

/// Φ_λ(points) = Σ_ν Υ_{λν} S_ν(points). Valid for coincident points.
Rational phi_eval(const EnsembleSpec& spec, const Partition& lambda,
                  std::span<const Rational> points);

/// Φ_λ(points) = det[φ_{λ_j + n - j}(x_k)] / Π_{j<k}(x_j - x_k). Needs pairwise
/// distinct points; throws DomainError on a singular Vandermonde.
Rational phi_eval_determinant(const EnsembleSpec& spec, const Partition& lambda,
                              std::span<const Rational> points);

}  // namespace rmt
