#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmt/moments.hpp"
#include "rmt/polynomial.hpp"
#include "rmt/rational.hpp"

namespace rmt {

/// Bernoulli polynomials B_0..B_maxDegree, B_j(h) = Σ_k C(j,k) B_k h^{j-k}.
class BernoulliTable {
public:
    explicit BernoulliTable(int maxDegree);

    int max_degree() const { return static_cast<int>(polys_.size()) - 1; }
    /// B_j as a polynomial in h; RangeError beyond max_degree().
    const Polynomial& polynomial(int j) const;
    /// Bernoulli number B_j = B_j(0) (B_1 = -1/2).
    const Rational& number(int j) const;

private:
    std::vector<Rational> numbers_;
    std::vector<Polynomial> polys_;
};

/// Shared table of at least the given degree.
const BernoulliTable& bernoulli_table(int minDegree);

enum class SeriesParity { Even, Odd, Averaged };
std::string series_parity_name(SeriesParity p);

/// Σ_k c_k x^{-k} with c_0 = 1, multiplying a leading factor described by a
/// text tag. x is the large parameter named in `variable`.
struct AsymptoticSeries {
    std::string leading;
    std::string variable = "N";
    SeriesParity parity = SeriesParity::Even;
    std::vector<Rational> coefficients;

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    const Rational& operator[](std::size_t k) const { return coefficients.at(k); }
    /// Σ_{k<=K} c_k x^{-k}.
    Rational partial_sum(const Rational& x, int K) const;
};

/// Largest order accepted by the Stirling-based series.
inline constexpr int kMaxStirlingOrder = 40;

/// Series part of Π_i Γ(z + h_i)^{e_i} from Stirling's series:
/// exp(Σ_{j>=2} (-1)^j Σ_i e_i B_j(h_i) / (j(j-1)) z^{1-j}), in powers of 1/z.
AsymptoticSeries gamma_product_series(const std::vector<std::pair<Rational, int>>& factors, int order);

/// Γ(z + h1) / Γ(z + h2) = z^{h1-h2} (1 + Σ_k c_k z^{-k}).
AsymptoticSeries gamma_ratio_series(const Rational& h1, const Rational& h2, int order);

/// Stored coefficients of C_{(N^{2p})}(2p) D_{e|o}(N) / (e^{-Np} (2N)^{Np+p²} γ_p),
/// the odd case without its (-1)^p. Orders up to 6 for any p, up to 9 for p = 1.
AsymptoticSeries cd_series(int p, Parity parity, int order);

/// Same series rebuilt from the duplication formula and Stirling's series.
AsymptoticSeries cd_series_regenerated(int p, Parity parity, int order);

enum class SeriesSource { Stored, Regenerated };
std::string series_source_name(SeriesSource s);
AsymptoticSeries cd_series(int p, Parity parity, int order, SeriesSource source);

/// Highest order stored for the given p.
int cd_series_stored_order(int p);

/// Coefficient-wise mean. RangeError when the orders differ.
AsymptoticSeries parity_average(const AsymptoticSeries& even, const AsymptoticSeries& odd);

/// Taylor coefficients of π ρ_sc(t) = sqrt(1 - t²/4) through t^order
/// (order even; DomainError otherwise).
Polynomial semicircle_taylor(int order);

/// (π ρ_sc(t))^{p²} = (1 - t²/4)^{p²/2} through t^order.
Polynomial semicircle_power_taylor(int p, int order);

/// Finite Laurent polynomial in N: coefficients of N^top, N^{top-1}, ...,
/// N^{bottom}. Only exponents in [bottom, top] are known.
struct LaurentSeries {
    int top = 0;
    int bottom = 0;
    std::vector<Rational> coefficients;  // index i holds N^{top - i}

    Rational at(int exponent) const;
    bool known(int exponent) const { return exponent >= bottom && exponent <= top; }
};

struct RecoveryRow {
    int power = 0;          // t^power
    Rational recovered;     // N^0 coefficient of the parity average
    Rational expected;      // coefficient of (π ρ_sc)^{p²}
    bool positive_powers_vanish = false;
    bool matches = false;
    LaurentSeries even;     // coefficient of t^power in S_e · bracket_e · e^{-Npt²/2}
    LaurentSeries odd;
    LaurentSeries averaged;
    LaurentSeries normalized;  // averaged divided by (π ρ_sc)^{p²}
};

struct RecoveryReport {
    int p = 0;
    int t_order = 0;
    int n_order = 0;
    int required_order = 0;
    SeriesSource source = SeriesSource::Stored;
    std::vector<RecoveryRow> rows;
    bool ok() const;
};

/// Expands E[det(t-M)^{2p}] / (e^{-Np} (2N)^{p²} γ_p) for even and odd N
/// through t^{tOrder}, multiplies by e^{-Npt²/2}, averages the two parities
/// as formal series in N and compares the N^0 part with (π ρ_sc(t))^{p²}.
/// Throws OrderStarvation when nOrder is below what the t-order needs.
RecoveryReport semicircle_recovery(int p, int tOrder, int nOrder, SeriesSource source = SeriesSource::Stored);

/// Order of the series needed for semicircle_recovery(p, tOrder, ·).
int recovery_required_order(int p, int tOrder);

struct ConvergencePoint {
    int N = 0;
    double error = 0.0;  // |exact/leading - partial sum through K|
};

struct ConvergenceReport {
    int p = 0;
    Parity parity = Parity::Even;
    int K = 0;
    ConvergencePoint first;
    ConvergencePoint second;
    double observed_exponent = 0.0;
    bool within(double relativeTolerance) const;
};

/// Truncation error of cd_series at order K, evaluated at two sizes of the
/// given parity with 200-bit arithmetic, and the decay exponent between them.
ConvergenceReport cd_convergence(int p, Parity parity, int K, int N1, int N2);

}  // namespace rmt
