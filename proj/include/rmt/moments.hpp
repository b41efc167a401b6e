#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "rmt/ensemble.hpp"
#include "rmt/partition.hpp"
#include "rmt/polynomial.hpp"
#include "rmt/rational.hpp"

namespace rmt {

enum class MomentRoute { BoxPhi, PartitionSum, DerivativeDet, ClosedFormT0, SecondMomentSums };

std::string route_name(MomentRoute r);
/// Accepts the names printed by route_name ("box-phi", "partition-sum", ...).
MomentRoute parse_route(const std::string& name);

struct MomentOptions {
    /// Largest number of partitions a single enumeration may visit.
    std::size_t partition_budget = 1'000'000;
};

/// E[det(t - M)^p]: either the whole polynomial in t or its value at one t.
struct MomentResult {
    EnsembleSpec ensemble;
    int p = 0;
    MomentRoute route = MomentRoute::PartitionSum;
    Polynomial polynomial;         // empty unless the route yields a polynomial
    std::optional<Rational> t;     // evaluation point, if any
    std::optional<Rational> value; // value at t, if any
};

/// E[Π_j det(t_j - M)] = Φ_{(N^p)}(t_1..t_p).
Rational correlation(const EnsembleSpec& spec, std::span<const Rational> points);

/// E[det(t - M)^p] as an exact polynomial in t, from the finite sums over
/// ν ⊆ (N^p) with dim V_ν and the D determinants. Throws ResourceError when
/// the box holds more partitions than the budget allows.
Polynomial moment_poly(const EnsembleSpec& spec, int p, const MomentOptions& opts = {});

/// Same, for a GUE-type average of size `size` with weight exp(-scale x²/2).
Polynomial gue_moment_poly_scaled(int size, int scale, int p, const MomentOptions& opts = {});

/// Φ_{(N^p)}(t, ..., t), through the Schur basis.
Rational moment_box_phi(const EnsembleSpec& spec, int p, const Rational& t);

/// det[φ^{(i)}_{N+j}(t)]_{i,j<p} / Π_{i<p} i!.
Rational moment_derivative_det(const EnsembleSpec& spec, int p, const Rational& t);

/// Dispatch by route. ClosedFormT0 is GUE only, needs t = 0 and even p
/// (it computes E[det M^p]); SecondMomentSums is GUE only with p = 2.
MomentResult moment(const EnsembleSpec& spec, int p, std::optional<Rational> t, MomentRoute route,
                    const MomentOptions& opts = {});

/// Π_{j<p} j! / (p+j)!.
Rational gamma_p(int p);
/// Π_{j<p} j!² / (m+j)!².
Rational d_even(int m, int p);
/// (-1)^p m!/(m+p)! Π_{j<p} j!² / (m+j)!².
Rational d_odd(int m, int p);
/// D_e(N) or D_o(N) according to the parity of N.
Rational d_box(int N, int p);
/// C_{(N^{2p})}(2p) D_{e|o}(N).
Rational cd_exact(int N, int p);

/// E[det M^{2p}] for GUE: (-1/2N)^{Np} C_{(N^{2p})}(2p) D_{e|o}(N).
Rational gue_moment_t0(int N, int p);

/// Coefficient of t^{2k} in E[det(t - M)^2] (GUE) divided by its t^0 term
/// (-1/2N)^N C_{(N,N)}(2) D_{(N,N),0}, from the closed single sums over j.
/// Zero for k > N.
Rational second_moment_coeff(int N, int k);

/// Coefficient of t^{2k} in the bracket E[det(t-M)^{2p}] / E[det M^{2p}]
/// (GUE), from the D determinants at λ = (N^{2p}).
Rational gue_bracket_coefficient(int N, int p, int k);

enum class Parity { Even, Odd };
std::string parity_name(Parity p);

/// gue_bracket_coefficient(N, p, k) as an exact polynomial in N, valid for N
/// of the given parity. Obtained by interpolation at 2k+1 sizes and confirmed
/// at two more; throws RangeError if the confirmation fails.
Polynomial gue_bracket_polynomial(int p, int k, Parity parity);

/// GUE one-point density R_1(t) = sqrt(N/2π) exp(-N t²/2) · r(t); returns the
/// polynomial r, assembled from the size N-1 second moment at weight
/// exp(-N x²/2) and the ratio of normalizations.
Polynomial one_point_density(int N);

/// GUE p-point density (p = 1 or 2) at the given points, with the factor
/// (N/2π)^{p/2} exp(-N Σ t_i²/2) stripped.
Rational correlation_density(int N, std::span<const Rational> points);

}  // namespace rmt
