#include "rmt/asymptotics.hpp"

#include <cmath>
#include <memory>
#include <mutex>

#include "rmt/bigfloat.hpp"
#include "rmt/errors.hpp"

namespace rmt {

BernoulliTable::BernoulliTable(int maxDegree) {
    if (maxDegree < 0) throw DomainError("negative Bernoulli degree");
    // Σ_{k<=m} C(m+1, k) B_k = 0 for m >= 1.
    numbers_.emplace_back(1);
    for (int m = 1; m <= maxDegree; ++m) {
        Rational s(0);
        for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * numbers_[static_cast<std::size_t>(k)];
        numbers_.push_back(-s / Rational(m + 1));
    }
    for (int j = 0; j <= maxDegree; ++j) {
        std::vector<Rational> c(static_cast<std::size_t>(j) + 1);
        for (int k = 0; k <= j; ++k) {
            c[static_cast<std::size_t>(j - k)] = Rational(binomial(j, k)) * numbers_[static_cast<std::size_t>(k)];
        }
        polys_.emplace_back(std::move(c));
    }
}

const Polynomial& BernoulliTable::polynomial(int j) const {
    if (j < 0 || j > max_degree()) throw RangeError("Bernoulli polynomial degree out of range");
    return polys_[static_cast<std::size_t>(j)];
}

const Rational& BernoulliTable::number(int j) const {
    if (j < 0 || j > max_degree()) throw RangeError("Bernoulli number index out of range");
    return numbers_[static_cast<std::size_t>(j)];
}

const BernoulliTable& bernoulli_table(int minDegree) {
    static std::mutex mutex;
    static std::unique_ptr<BernoulliTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->max_degree() < minDegree) {
        table = std::make_unique<BernoulliTable>(std::max(minDegree, 2 * kMaxStirlingOrder + 2));
    }
    return *table;
}

std::string series_parity_name(SeriesParity p) {
    switch (p) {
        case SeriesParity::Even: return "even";
        case SeriesParity::Odd: return "odd";
        case SeriesParity::Averaged: return "averaged";
    }
    return "?";
}

Rational AsymptoticSeries::partial_sum(const Rational& x, int K) const {
    if (K > order()) throw RangeError("partial sum beyond the series order");
    Rational total(0);
    const Rational inv = x.inverse();
    Rational power(1);
    for (int k = 0; k <= K; ++k) {
        total += coefficients[static_cast<std::size_t>(k)] * power;
        power *= inv;
    }
    return total;
}

namespace {

// exp of Σ_{n>=1} g_n x^n, truncated at x^order.
std::vector<Rational> exp_series(const std::vector<Rational>& g, int order) {
    std::vector<Rational> f(static_cast<std::size_t>(order) + 1);
    f[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) {
            s += Rational(k) * g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(n - k)];
        }
        f[static_cast<std::size_t>(n)] = s / Rational(n);
    }
    return f;
}

}  // namespace

AsymptoticSeries gamma_product_series(const std::vector<std::pair<Rational, int>>& factors, int order) {
    if (order < 0) throw DomainError("negative series order");
    if (order > kMaxStirlingOrder) throw ResourceError("series order above " + std::to_string(kMaxStirlingOrder));
    const BernoulliTable& bern = bernoulli_table(order + 1);
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        const int j = n + 1;
        Rational s(0);
        for (const auto& [h, e] : factors) s += Rational(e) * bern.polynomial(j)(h);
        const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
        g[static_cast<std::size_t>(n)] = sign * s / Rational(j * (j - 1));
    }
    AsymptoticSeries out;
    out.leading = "prod Gamma(z + h)^e";
    out.variable = "z";
    out.coefficients = exp_series(g, order);
    return out;
}

AsymptoticSeries gamma_ratio_series(const Rational& h1, const Rational& h2, int order) {
    AsymptoticSeries out = gamma_product_series({{h1, 1}, {h2, -1}}, order);
    out.leading = "z^(" + (h1 - h2).str() + ")";
    return out;
}

namespace {

// c · p^outer · Σ_i a_i p^{2i} with a in increasing powers of p².
struct StoredCoefficient {
    int outer;
    long denominator;
    std::vector<long> inner;  // coefficients of p^0, p^2, p^4, ...

    Rational eval(int p) const {
        const Rational p2 = Rational(p) * Rational(p);
        Rational s(0);
        Rational power(1);
        for (long a : inner) {
            s += Rational(a) * power;
            power *= p2;
        }
        return Rational(p).pow(outer) * s / Rational(denominator);
    }
};

const std::vector<StoredCoefficient>& even_table() {
    static const std::vector<StoredCoefficient> t{
        {1, 6, {1, 4}},
        {2, 72, {-11, -16, 16}},
        {1, 6480, {-756, 1265, 708, -1200, 320}},
        {2, 155520, {51408, -56371, -6400, 25248, -10240, 1280}},
        {1, 6531840, {1607040, -5598936, 4606735, -399844, -982688, 499072, -98560, 7168}},
        {2, 1175731200,
         {-1390123296, 2663679600, -1697420809, 298943760, 158864016, -103093760, 25294080, -3010560, 143360}},
    };
    return t;
}

const std::vector<StoredCoefficient>& odd_table() {
    static const std::vector<StoredCoefficient> t{
        {1, 3, {-1, 2}},
        {2, 18, {7, -10, 4}},
        {1, 810, {108, -455, 516, -240, 40}},
        {2, 9720, {-4320, 9509, -8356, 3828, -880, 80}},
        {1, 204120, {-51840, 255528, -372127, 266818, -113428, 28616, -3920, 224}},
        {2, 18370800,
         {25046496, -62864640, 65605589, -39481170, 15363624, -3919160, 628320, -57120, 2240}},
    };
    return t;
}

// p = 1, orders 7..9.
const std::vector<Rational>& p1_tail(Parity parity) {
    static const std::vector<Rational> even{
        Rational::parse("224766221/1410877440"),
        Rational::parse("41757020981/338610585600"),
        Rational::parse("-889926952101377/1005673439232000"),
    };
    static const std::vector<Rational> odd{
        Rational::parse("-8225671/55112400"),
        Rational::parse("-69685339/1322697600"),
        Rational::parse("1674981058019/1964205936000"),
    };
    return parity == Parity::Even ? even : odd;
}

constexpr int kSymbolicOrder = 6;
constexpr int kP1Order = 9;

std::string cd_leading(Parity parity) {
    return parity == Parity::Even ? "exp(-N p) (2N)^(N p + p^2) gamma_p"
                                  : "(-1)^p exp(-N p) (2N)^(N p + p^2) gamma_p";
}

}  // namespace

int cd_series_stored_order(int p) { return p == 1 ? kP1Order : kSymbolicOrder; }

AsymptoticSeries cd_series(int p, Parity parity, int order) {
    if (p < 1) throw DomainError("p must be positive");
    if (order < 0) throw DomainError("negative series order");
    if (order > cd_series_stored_order(p)) {
        throw RangeError("stored series for p = " + std::to_string(p) + " end at N^-" +
                         std::to_string(cd_series_stored_order(p)) + ", requested N^-" + std::to_string(order));
    }
    AsymptoticSeries out;
    out.leading = cd_leading(parity);
    out.parity = parity == Parity::Even ? SeriesParity::Even : SeriesParity::Odd;
    out.coefficients.emplace_back(1);
    const auto& table = parity == Parity::Even ? even_table() : odd_table();
    for (int k = 1; k <= order; ++k) {
        if (k <= kSymbolicOrder) {
            out.coefficients.push_back(table[static_cast<std::size_t>(k - 1)].eval(p));
        } else {
            out.coefficients.push_back(p1_tail(parity)[static_cast<std::size_t>(k - kSymbolicOrder - 1)]);
        }
    }
    return out;
}

AsymptoticSeries cd_series_regenerated(int p, Parity parity, int order) {
    if (p < 1) throw DomainError("p must be positive");
    // With z = N/2 every factorial becomes Γ(z + h): (N + a - 1)! = Γ(2z + a)
    // splits by the duplication formula into Γ(z + a/2) Γ(z + (a+1)/2).
    std::vector<std::pair<Rational, int>> factors;
    auto doubled = [&](long a) {
        factors.emplace_back(Rational(a, 2), 1);
        factors.emplace_back(Rational(a + 1, 2), 1);
    };
    for (long j = 0; j < p; ++j) {
        doubled(j + 1);      // (N + j)!
        doubled(p + j + 1);  // (N + p + j)!
        if (parity == Parity::Even) {
            factors.emplace_back(Rational(j + 1), -2);  // (N/2 + j)!^2
        } else {
            factors.emplace_back(Rational(2 * j + 1, 2), -2);  // ((N-1)/2 + j)!^2
        }
    }
    if (parity == Parity::Odd) {
        factors.emplace_back(Rational(1, 2), 1);              // ((N-1)/2)!
        factors.emplace_back(Rational(2L * p + 1, 2), -1);    // ((N-1)/2 + p)!
    }
    AsymptoticSeries out = gamma_product_series(factors, order);
    for (int k = 1; k <= order; ++k) out.coefficients[static_cast<std::size_t>(k)] *= Rational(2).pow(k);
    out.leading = cd_leading(parity);
    out.variable = "N";
    out.parity = parity == Parity::Even ? SeriesParity::Even : SeriesParity::Odd;
    return out;
}

std::string series_source_name(SeriesSource s) { return s == SeriesSource::Stored ? "stored" : "regenerated"; }

AsymptoticSeries cd_series(int p, Parity parity, int order, SeriesSource source) {
    return source == SeriesSource::Stored ? cd_series(p, parity, order) : cd_series_regenerated(p, parity, order);
}

AsymptoticSeries parity_average(const AsymptoticSeries& even, const AsymptoticSeries& odd) {
    if (even.order() != odd.order()) throw RangeError("series orders differ");
    AsymptoticSeries out;
    out.leading = "formal average of the even and odd series";
    out.variable = even.variable;
    out.parity = SeriesParity::Averaged;
    for (std::size_t k = 0; k < even.coefficients.size(); ++k) {
        out.coefficients.push_back((even.coefficients[k] + odd.coefficients[k]) / Rational(2));
    }
    return out;
}

namespace {

Polynomial binomial_series_in_t2(const Rational& exponent, int order) {
    if (order < 0 || order % 2 != 0) throw DomainError("t-order must be even and non-negative");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    const Rational quarter(-1, 4);
    for (int j = 0; 2 * j <= order; ++j) c[static_cast<std::size_t>(2 * j)] = binomial(exponent, j) * quarter.pow(j);
    return Polynomial(std::move(c));
}

}  // namespace

Polynomial semicircle_taylor(int order) { return binomial_series_in_t2(Rational(1, 2), order); }

Polynomial semicircle_power_taylor(int p, int order) {
    return binomial_series_in_t2(Rational(static_cast<long>(p) * p, 2), order);
}

Rational LaurentSeries::at(int exponent) const {
    if (exponent > top) return Rational(0);
    if (exponent < bottom) throw RangeError("coefficient of N^" + std::to_string(exponent) + " is not known");
    return coefficients[static_cast<std::size_t>(top - exponent)];
}

bool RecoveryReport::ok() const {
    for (const auto& r : rows) {
        if (!r.matches) return false;
    }
    return !rows.empty();
}

namespace {

// Coefficient of t^{2j} in bracket(N, t) e^{-Npt²/2}, as a polynomial in N.
Polynomial damped_bracket(int p, int j, Parity parity) {
    Polynomial out;
    const Polynomial N = Polynomial::variable();
    for (int a = 0; a <= j; ++a) {
        const int b = j - a;
        Polynomial term = gue_bracket_polynomial(p, a, parity);
        const Rational c = Rational(-p, 2).pow(b) * inverse_factorial(b);
        Polynomial nb(Rational(1));
        for (int i = 0; i < b; ++i) nb *= N;
        out += term * nb * c;
    }
    return out;
}

LaurentSeries times_series(const Polynomial& P, const AsymptoticSeries& S, int nOrder) {
    LaurentSeries out;
    out.top = std::max(P.degree(), 0);
    out.bottom = out.top - nOrder;
    for (int e = out.top; e >= out.bottom; --e) {
        Rational s(0);
        for (int d = std::max(e, 0); d <= P.degree(); ++d) {
            s += P.coefficient(static_cast<std::size_t>(d)) * S[static_cast<std::size_t>(d - e)];
        }
        out.coefficients.push_back(s);
    }
    return out;
}

LaurentSeries combine(const std::vector<std::pair<Rational, const LaurentSeries*>>& terms) {
    LaurentSeries out;
    out.top = INT32_MIN;
    out.bottom = INT32_MIN;
    for (const auto& [c, s] : terms) {
        out.top = std::max(out.top, s->top);
        out.bottom = std::max(out.bottom, s->bottom);
    }
    for (int e = out.top; e >= out.bottom; --e) {
        Rational v(0);
        for (const auto& [c, s] : terms) v += c * s->at(e);
        out.coefficients.push_back(v);
    }
    return out;
}

}  // namespace

int recovery_required_order(int p, int tOrder) {
    if (p < 1) throw DomainError("p must be positive");
    if (tOrder < 0 || tOrder % 2 != 0) throw DomainError("t-order must be even and non-negative");
    int required = 0;
    for (int j = 0; 2 * j <= tOrder; ++j) {
        for (Parity par : {Parity::Even, Parity::Odd}) required = std::max(required, damped_bracket(p, j, par).degree());
    }
    return required;
}

RecoveryReport semicircle_recovery(int p, int tOrder, int nOrder, SeriesSource source) {
    RecoveryReport report;
    report.p = p;
    report.t_order = tOrder;
    report.n_order = nOrder;
    report.source = source;
    report.required_order = recovery_required_order(p, tOrder);
    if (nOrder < report.required_order) throw OrderStarvation(report.required_order, nOrder);
    const AsymptoticSeries se = cd_series(p, Parity::Even, nOrder, source);
    const AsymptoticSeries so = cd_series(p, Parity::Odd, nOrder, source);
    const Polynomial target = semicircle_power_taylor(p, tOrder);
    const Polynomial inverse = binomial_series_in_t2(Rational(-static_cast<long>(p) * p, 2), tOrder);
    for (int j = 0; 2 * j <= tOrder; ++j) {
        RecoveryRow row;
        row.power = 2 * j;
        row.even = times_series(damped_bracket(p, j, Parity::Even), se, nOrder);
        row.odd = times_series(damped_bracket(p, j, Parity::Odd), so, nOrder);
        row.averaged = combine({{Rational(1, 2), &row.even}, {Rational(1, 2), &row.odd}});
        std::vector<std::pair<Rational, const LaurentSeries*>> parts;
        for (int i = 0; i <= j; ++i) {
            const LaurentSeries* source_row =
                i == 0 ? &row.averaged : &report.rows[static_cast<std::size_t>(j - i)].averaged;
            parts.emplace_back(inverse.coefficient(static_cast<std::size_t>(2 * i)), source_row);
        }
        row.normalized = combine(parts);
        row.recovered = row.averaged.at(0);
        row.expected = target.coefficient(static_cast<std::size_t>(2 * j));
        row.positive_powers_vanish = true;
        for (int e = 1; e <= row.averaged.top; ++e) {
            if (!row.averaged.at(e).is_zero()) row.positive_powers_vanish = false;
        }
        row.matches = row.positive_powers_vanish && row.recovered == row.expected;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool ConvergenceReport::within(double relativeTolerance) const {
    const double target = K + 1;
    return std::isfinite(observed_exponent) && std::abs(observed_exponent - target) <= relativeTolerance * target;
}

namespace {

double truncation_error(int N, int p, Parity parity, const AsymptoticSeries& series, int K) {
    Rational exact = cd_exact(N, p);
    if (parity == Parity::Odd && p % 2 == 1) exact = -exact;
    const BigFloat n{Rational(N)};
    const BigFloat np{Rational(static_cast<long>(N) * p)};
    const BigFloat leading = BigFloat(gamma_p(p)) * (BigFloat(Rational(0)) - np).exp() *
                             (BigFloat(Rational(2)) * n).pow(BigFloat(Rational(static_cast<long>(N) * p + static_cast<long>(p) * p)));
    const BigFloat ratio = BigFloat(exact) / leading;
    return (ratio - BigFloat(series.partial_sum(Rational(N), K))).abs().to_double();
}

}  // namespace

ConvergenceReport cd_convergence(int p, Parity parity, int K, int N1, int N2) {
    const int want = parity == Parity::Even ? 0 : 1;
    if (N1 % 2 != want || N2 % 2 != want) throw DomainError("sizes must have the requested parity");
    if (N1 >= N2) throw DomainError("need N1 < N2");
    const AsymptoticSeries series = cd_series(p, parity, K);
    ConvergenceReport r;
    r.p = p;
    r.parity = parity;
    r.K = K;
    r.first = {N1, truncation_error(N1, p, parity, series, K)};
    r.second = {N2, truncation_error(N2, p, parity, series, K)};
    r.observed_exponent = std::log(r.first.error / r.second.error) / std::log(static_cast<double>(N2) / N1);
    return r;
}

}  // namespace rmt
