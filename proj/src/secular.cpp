#include "rmt/secular.hpp"

#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt/symmetric_group.hpp"

namespace rmt {

namespace {

Partition column(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

// top! / bottom!
Rational falling_ratio(int top, int bottom) {
    return Rational(factorial(top)) / Rational(factorial(bottom));
}

Rational neg_over_2n(int N, int k) { return Rational(-1, 2L * N).pow(k); }

}  // namespace

Rational psi_hermite_column(int N, int r, int j) {
    if (j < 0 || 2 * j > r || r > N) return Rational(0);
    // (-1)^j (N-r+2j)! / ((2N)^j j! (N-r)!)
    return neg_over_2n(N, j) * inverse_factorial(j) * falling_ratio(N - r + 2 * j, N - r);
}

Rational psi_laguerre_column(int N, const Rational& gamma, int r, int j) {
    if (j < 0 || j > r || r > N) return Rational(0);
    return Rational(1, 2L * N).pow(r - j) * inverse_factorial(r - j) * falling_ratio(N - j, N - r) *
           rising(Rational(N - r) + gamma + Rational(1), r - j);
}

Rational secular_mean(const EnsembleSpec& spec, int r) {
    spec.validate();
    if (r < 0) throw DomainError("secular index must be non-negative");
    const int N = spec.N;
    if (r > N) return Rational(0);
    switch (spec.kind) {
        case Family::Hermite:
            if (r % 2 != 0) return Rational(0);
            return psi_hermite_column(N, r, r / 2);
        case Family::Laguerre:
            return psi_laguerre_column(N, spec.gamma, r, 0);
        case Family::Jacobi:
            return psi(spec, column(r), Partition(), N);
    }
    return Rational(0);
}

Rational secular_pair_gue(int N, int r, int s, PairClass cls) {
    if (N < 1) throw DomainError("N must be positive");
    if (r < 0 || s < 0) throw DomainError("secular index must be non-negative");
    const int off = cls == PairClass::Even ? 0 : 1;
    if (2 * r + off > N || 2 * s + off > N) return Rational(0);
    Rational sum(0);
    for (int j = 0; j <= std::min(r, s); ++j) {
        sum += Rational(4).pow(j) * inverse_factorial(r - j) * inverse_factorial(s - j) *
               Rational(factorial(N - off)) * Rational(factorial(N - 2 * j - off)) /
               (Rational(factorial(N - 2 * r - off)) * Rational(factorial(N - 2 * s - off)));
    }
    return neg_over_2n(N, r + s) * sum;
}

Rational secular_pair_gue(int N, int a, int b) {
    if (a < 0 || b < 0) throw DomainError("secular index must be non-negative");
    if ((a + b) % 2 != 0) return Rational(0);
    if (a % 2 == 0) return secular_pair_gue(N, a / 2, b / 2, PairClass::Even);
    return secular_pair_gue(N, a / 2, b / 2, PairClass::Odd);
}

Rational psi_hermite_to_constant(int N, const Partition& mu) {
    const int n = mu.weight();
    if (n % 2 != 0) return Rational(0);
    const Integer chi = character(mu, Partition(std::vector<int>(static_cast<std::size_t>(n / 2), 2)));
    if (chi == 0) return Rational(0);
    return Rational(1, 2L * N).pow(n / 2) * inverse_factorial(n / 2) * Rational(chi) * Rational(c_lambda(mu, N));
}

Rational psi_laguerre_to_constant(int N, const Rational& gamma, const Partition& mu) {
    const int n = mu.weight();
    Rational boxes(1);
    for (int i = 0; i < mu.length(); ++i) {
        for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) boxes *= Rational(N + j - i) + gamma;
    }
    return Rational(1, 2L * N).pow(n) * boxes * Rational(c_lambda(mu, N)) * Rational(dim_V(mu)) *
           inverse_factorial(n);
}

Rational secular_joint(const EnsembleSpec& spec, const Partition& lambda) {
    spec.validate();
    if (spec.kind == Family::Jacobi) {
        throw DomainError("joint secular moments are available for GUE and LUE only; JUE has first moments");
    }
    const int n = lambda.weight();
    if (spec.kind == Family::Hermite && n % 2 != 0) return Rational(0);
    Rational sum(0);
    for (const Partition& mu : partitions_of(n)) {
        const Integer k = kostka(conjugate(mu), lambda);
        if (k == 0) continue;
        const Rational psi0 = spec.kind == Family::Hermite ? psi_hermite_to_constant(spec.N, mu)
                                                           : psi_laguerre_to_constant(spec.N, spec.gamma, mu);
        sum += Rational(k) * psi0;
    }
    return sum;
}

Rational secular_joint_expansion(const EnsembleSpec& spec, const Partition& lambda) {
    spec.validate();
    Rational sum(0);
    for (const Partition& mu : partitions_of(lambda.weight())) {
        if (mu.length() > spec.N) continue;  // s_μ vanishes in N variables
        const Integer k = kostka(conjugate(mu), lambda);
        if (k == 0) continue;
        sum += Rational(k) * psi(spec, mu, Partition(), spec.N);
    }
    return sum;
}

GeneratingReport secular_generating_check(const EnsembleSpec& spec) {
    spec.validate();
    if (spec.N > 12) throw DomainError("generating check is limited to N <= 12");
    const int N = spec.N;
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
        c[static_cast<std::size_t>(N - j)] = sign * secular_mean(spec, j);
    }
    GeneratingReport report;
    report.spec = spec;
    report.generated = Polynomial(std::move(c));
    report.monic = monic_polynomial(spec, N);
    report.passed = report.generated == report.monic;
    return report;
}

}  // namespace rmt
