#include "rmt/moments.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/matrix.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt/symmetric_group.hpp"

namespace rmt {

std::string route_name(MomentRoute r) {
    switch (r) {
        case MomentRoute::BoxPhi: return "box-phi";
        case MomentRoute::PartitionSum: return "partition-sum";
        case MomentRoute::DerivativeDet: return "derivative-det";
        case MomentRoute::ClosedFormT0: return "closed-form-t0";
        case MomentRoute::SecondMomentSums: return "second-moment-sums";
    }
    return "?";
}

MomentRoute parse_route(const std::string& name) {
    for (auto r : {MomentRoute::BoxPhi, MomentRoute::PartitionSum, MomentRoute::DerivativeDet,
                   MomentRoute::ClosedFormT0, MomentRoute::SecondMomentSums}) {
        if (route_name(r) == name) return r;
    }
    throw DomainError("unknown route '" + name + "'");
}

namespace {

void check_budget(int width, int height, const MomentOptions& opts) {
    const Integer count = binomial(static_cast<long>(width) + height, height);
    if (count > Integer(static_cast<unsigned long>(opts.partition_budget))) {
        throw ResourceError("box (" + std::to_string(width) + "^" + std::to_string(height) + ") holds " +
                            count.get_str() + " partitions, over the budget of " +
                            std::to_string(opts.partition_budget));
    }
}

Rational dim_over_factorial(const Partition& nu) {
    return Rational(dim_V(nu)) / Rational(factorial(nu.weight()));
}

void require_order(int p) {
    if (p < 1) throw DomainError("moment order must be at least 1");
}

// Builds the degree-(deg) polynomial through values at t = 0..deg.
template <class F>
Polynomial sample_polynomial(int deg, F&& valueAt) {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 0; i <= deg; ++i) {
        xs.emplace_back(i);
        ys.push_back(valueAt(Rational(i)));
    }
    return interpolate(xs, ys);
}

}  // namespace

Rational correlation(const EnsembleSpec& spec, std::span<const Rational> points) {
    spec.validate();
    if (points.empty()) throw DomainError("correlation needs at least one point");
    return phi_eval(spec, Partition::rectangle(spec.N, static_cast<int>(points.size())), points);
}

Polynomial gue_moment_poly_scaled(int size, int scale, int p, const MomentOptions& opts) {
    require_order(p);
    if (size < 0 || scale < 1) throw DomainError("invalid size or scale");
    check_budget(size, p, opts);
    const Partition lambda = Partition::rectangle(size, p);
    const Rational cl(c_lambda(lambda, p));
    const Rational minusInv = -Rational(2 * scale).inverse();
    std::vector<Rational> coeffs(static_cast<std::size_t>(lambda.weight()) + 1);
    for (const auto& nu : partitions_in_box(size, p)) {
        const int diff = lambda.weight() - nu.weight();
        if (diff % 2 != 0) continue;
        const Rational d = d_matrix(DFamily::Hermite, lambda, nu);
        if (d.is_zero()) continue;
        coeffs[static_cast<std::size_t>(nu.weight())] += cl * minusInv.pow(diff / 2) * dim_over_factorial(nu) * d;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial moment_poly(const EnsembleSpec& spec, int p, const MomentOptions& opts) {
    spec.validate();
    require_order(p);
    if (spec.kind == Family::Hermite) return gue_moment_poly_scaled(spec.N, spec.N, p, opts);
    check_budget(spec.N, p, opts);
    const Partition lambda = Partition::rectangle(spec.N, p);
    const Partition empty;
    std::vector<Rational> coeffs(static_cast<std::size_t>(lambda.weight()) + 1);
    if (spec.kind == Family::Laguerre) {
        const Rational minusInv = -Rational(2 * spec.N).inverse();
        const Rational g0 = g_ratio(lambda, empty, p, Rational(0));
        for (const auto& nu : partitions_in_box(spec.N, p)) {
            const Rational d = d_matrix(DFamily::Laguerre, lambda, nu);
            if (d.is_zero()) continue;
            coeffs[static_cast<std::size_t>(nu.weight())] +=
                minusInv.pow(lambda.weight() - nu.weight()) * g0 * g_ratio(lambda, nu, p, spec.gamma) *
                dim_over_factorial(nu) * d;
        }
    } else {
        const DParams params{p, spec.gamma1 + spec.gamma2};
        const Rational g0 = g_ratio(lambda, empty, p, Rational(0));
        const Rational sign = lambda.weight() % 2 == 0 ? Rational(1) : Rational(-1);
        for (const auto& nu : partitions_in_box(spec.N, p)) {
            const Rational d = d_matrix(DFamily::JacobiTilde, lambda, nu, params);
            if (d.is_zero()) continue;
            const Rational nuSign = nu.weight() % 2 == 0 ? Rational(1) : Rational(-1);
            coeffs[static_cast<std::size_t>(nu.weight())] +=
                sign * nuSign * g0 * g_ratio(lambda, nu, p, spec.gamma1) * dim_over_factorial(nu) * d;
        }
    }
    return Polynomial(std::move(coeffs));
}

Rational moment_box_phi(const EnsembleSpec& spec, int p, const Rational& t) {
    require_order(p);
    const std::vector<Rational> points(static_cast<std::size_t>(p), t);
    return correlation(spec, points);
}

Rational moment_derivative_det(const EnsembleSpec& spec, int p, const Rational& t) {
    spec.validate();
    require_order(p);
    const std::size_t n = static_cast<std::size_t>(p);
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial phi = monic_polynomial(spec, spec.N + static_cast<int>(j));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = phi(t);
            phi = phi.derivative();
        }
    }
    Rational norm(1);
    for (long i = 0; i < p; ++i) norm *= Rational(factorial(i));
    return det_exact(m) / norm;
}

Rational gamma_p(int p) {
    Rational r(1);
    for (long j = 0; j < p; ++j) r *= Rational(factorial(j)) / Rational(factorial(p + j));
    return r;
}

Rational d_even(int m, int p) {
    Rational r(1);
    for (long j = 0; j < p; ++j) {
        const Rational q = Rational(factorial(j)) / Rational(factorial(m + j));
        r *= q * q;
    }
    return r;
}

Rational d_odd(int m, int p) {
    const Rational sign = p % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * Rational(factorial(m)) / Rational(factorial(m + p)) * d_even(m, p);
}

Rational d_box(int N, int p) { return N % 2 == 0 ? d_even(N / 2, p) : d_odd(N / 2, p); }

Rational cd_exact(int N, int p) {
    return Rational(c_lambda(Partition::rectangle(N, 2 * p), 2 * p)) * d_box(N, p);
}

Rational gue_moment_t0(int N, int p) {
    if (N < 1 || p < 1) throw DomainError("N and p must be positive");
    return (-Rational(2 * N).inverse()).pow(static_cast<long>(N) * p) * cd_exact(N, p);
}

Rational second_moment_coeff(int N, int k) {
    if (N < 1) throw DomainError("N must be positive");
    if (k < 0 || k > N) return Rational(0);
    auto inv = [](long n) { return inverse_factorial(n); };
    Rational sum(0);
    if (N % 2 == 0) {
        const long m = N / 2;
        const Rational mf(factorial(m));
        for (long j = 0; 2 * j <= k - 1; ++j) {
            const Rational bracket = Rational(2 * k + 1 - 4 * j) * inv(2 * k + 1 - 2 * j) * inv(2 * j) -
                                     Rational(2 * k - 1 - 4 * j) * inv(2 * k - 2 * j) * inv(2 * j + 1);
            sum += bracket * mf * mf * inv(m - k + j) * inv(m - j);
        }
        if (k % 2 == 0) {
            const Rational r = mf * inv(m - k / 2);
            sum += inv(k) * inv(k + 1) * r * r;
        }
    } else {
        const long m = (N - 1) / 2;
        const Rational mf(factorial(m));
        const Rational mf1(factorial(m + 1));
        for (long j = 0; 2 * j <= k - 2; ++j) {
            const Rational bracket = -Rational(2 * k - 1 - 4 * j) * inv(2 * k - 2 * j) * inv(2 * j + 1) +
                                     Rational(2 * k - 3 - 4 * j) * inv(2 * k - 2 * j - 1) * inv(2 * j + 2);
            sum += bracket * mf * mf1 * inv(m + 1 - k + j) * inv(m - j);
        }
        sum += inv(2 * k) * mf * inv(m - k);
        if (k % 2 == 1) {
            const Rational r = inv(m - (k - 1) / 2);
            sum -= inv(k) * inv(k + 1) * mf * mf1 * r * r;
        }
    }
    return Rational(-2 * N).pow(k) * sum;
}

Rational gue_bracket_coefficient(int N, int p, int k) {
    if (N < 1 || p < 1) throw DomainError("N and p must be positive");
    if (k < 0 || k > N * p) return Rational(0);
    const Partition lambda = Partition::rectangle(N, 2 * p);
    const Rational d0 = d_matrix(DFamily::Hermite, lambda, Partition{});
    Rational sum(0);
    for (const auto& nu : partitions_in_box(N, 2 * p, BoxFilter::fixed(2 * k))) {
        const Rational d = d_matrix(DFamily::Hermite, lambda, nu);
        if (!d.is_zero()) sum += dim_over_factorial(nu) * d;
    }
    return Rational(-2 * N).pow(k) * sum / d0;
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Polynomial gue_bracket_polynomial(int p, int k, Parity parity) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, Polynomial> memo;
    const auto key = std::make_tuple(p, k, parity == Parity::Even ? 0 : 1);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    if (p < 1 || k < 0) throw DomainError("need p >= 1 and k >= 0");
    int start = 2 * k + 2;
    if ((start % 2 == 0) != (parity == Parity::Even)) ++start;
    const int nodes = 2 * k + 1;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 0; i < nodes; ++i) {
        const int N = start + 2 * i;
        xs.emplace_back(N);
        ys.push_back(gue_bracket_coefficient(N, p, k));
    }
    Polynomial poly = interpolate(xs, ys);
    for (int i = nodes; i < nodes + 2; ++i) {
        const int N = start + 2 * i;
        if (poly(Rational(N)) != gue_bracket_coefficient(N, p, k)) {
            throw RangeError("bracket coefficient is not a polynomial of degree <= " + std::to_string(2 * k) +
                             " in N");
        }
    }
    std::lock_guard lock(mutex);
    memo.emplace(key, poly);
    return poly;
}

Polynomial one_point_density(int N) {
    if (N < 1) throw DomainError("N must be positive");
    const Rational ratio = Rational(N).pow(N) / Rational(factorial(N));
    return gue_moment_poly_scaled(N - 1, N, 2) * ratio;
}

Rational correlation_density(int N, std::span<const Rational> points) {
    if (points.size() == 1) return one_point_density(N)(points[0]);
    if (points.size() != 2) throw DomainError("densities are available for one or two points only");
    if (N < 2) return Rational(0);
    const Rational& a = points[0];
    const Rational& b = points[1];
    const std::vector<Rational> doubled{a, a, b, b};
    const Rational avg = phi_eval(EnsembleSpec::gue(N), Partition::rectangle(N - 2, 4), doubled);
    const Rational ratio = Rational(N).pow(2L * N - 3) / Rational(Integer(factorial(N - 2) * factorial(N - 1)));
    return (a - b) * (a - b) * ratio * avg;
}

MomentResult moment(const EnsembleSpec& spec, int p, std::optional<Rational> t, MomentRoute route,
                    const MomentOptions& opts) {
    spec.validate();
    require_order(p);
    MomentResult out;
    out.ensemble = spec;
    out.p = p;
    out.route = route;
    out.t = t;
    const int deg = spec.N * p;
    switch (route) {
        case MomentRoute::PartitionSum:
            out.polynomial = moment_poly(spec, p, opts);
            break;
        case MomentRoute::BoxPhi:
            check_budget(spec.N, p, opts);
            if (t) {
                out.value = moment_box_phi(spec, p, *t);
                return out;
            }
            out.polynomial = sample_polynomial(deg, [&](const Rational& x) { return moment_box_phi(spec, p, x); });
            break;
        case MomentRoute::DerivativeDet:
            if (t) {
                out.value = moment_derivative_det(spec, p, *t);
                return out;
            }
            out.polynomial =
                sample_polynomial(deg, [&](const Rational& x) { return moment_derivative_det(spec, p, x); });
            break;
        case MomentRoute::ClosedFormT0:
            if (spec.kind != Family::Hermite) throw DomainError("the t = 0 closed form is for GUE only");
            if (p % 2 != 0) throw DomainError("the t = 0 closed form needs an even power");
            if (t && !t->is_zero()) throw DomainError("the t = 0 closed form needs t = 0");
            out.t = Rational(0);
            out.value = gue_moment_t0(spec.N, p / 2);
            return out;
        case MomentRoute::SecondMomentSums: {
            if (spec.kind != Family::Hermite || p != 2) {
                throw DomainError("the second-moment sums cover GUE with power 2 only");
            }
            const Rational pref = (-Rational(2 * spec.N).inverse()).pow(spec.N) *
                                  Rational(c_lambda(Partition::rectangle(spec.N, 2), 2)) * d_box(spec.N, 1);
            std::vector<Rational> coeffs(static_cast<std::size_t>(2 * spec.N) + 1);
            for (int k = 0; k <= spec.N; ++k) coeffs[static_cast<std::size_t>(2 * k)] = pref * second_moment_coeff(spec.N, k);
            out.polynomial = Polynomial(std::move(coeffs));
            break;
        }
    }
    if (t) out.value = out.polynomial(*t);
    return out;
}

}  // namespace rmt
