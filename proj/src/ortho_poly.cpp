#include "rmt/ortho_poly.hpp"

#include "rmt/errors.hpp"

namespace rmt {

Polynomial hermite_monic(int n, int N) {
    if (n < 0) throw DomainError("polynomial degree must be non-negative");
    if (N < 1) throw DomainError("Hermite scale N must be positive");
    Polynomial previous;                     // h_{-1} = 0
    Polynomial current(Rational(1));         // h_0 = 1
    const Polynomial t = Polynomial::variable();
    for (int k = 0; k < n; ++k) {
        Polynomial next = t * current - previous * Rational(Integer(k), Integer(N));
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

Polynomial laguerre_monic(int n, int N, const Rational& gamma) {
    if (n < 0) throw DomainError("polynomial degree must be non-negative");
    if (N < 1) throw DomainError("Laguerre scale N must be positive");
    if (gamma <= Rational(-1)) throw DomainError("Laguerre parameter gamma must exceed -1");
    const Rational two_n(2 * N);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        // (-1)^{n+k} n! (2N)^{k-n} binom(n+γ, n-k) / k!
        Rational v = rising(Rational(k + 1) + gamma, n - k) * inverse_factorial(n - k);
        v *= Rational(factorial(n)) * inverse_factorial(k) * two_n.pow(k - n);
        if ((n + k) % 2 != 0) v = -v;
        c[static_cast<std::size_t>(k)] = v;
    }
    return Polynomial(std::move(c));
}

Polynomial jacobi_monic(int n, const Rational& gamma1, const Rational& gamma2) {
    if (n < 0) throw DomainError("polynomial degree must be non-negative");
    if (gamma1 <= Rational(-1) || gamma2 <= Rational(-1)) {
        throw DomainError("Jacobi parameters must exceed -1");
    }
    // P_n(1 - 2x) ∝ 2F1(-n, n+γ1+γ2+1; γ1+1; x).
    const Rational s = gamma1 + gamma2;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = rising(Rational(-n), k) * rising(Rational(n + 1) + s, k) /
                                         (rising(gamma1 + Rational(1), k) * Rational(factorial(k)));
    }
    const Rational lead = c.back();
    for (auto& v : c) v /= lead;
    return Polynomial(std::move(c));
}

Polynomial monic_polynomial(const EnsembleSpec& spec, int n) {
    switch (spec.kind) {
        case Family::Hermite: return hermite_monic(n, spec.N);
        case Family::Laguerre: return laguerre_monic(n, spec.N, spec.gamma);
        case Family::Jacobi: return jacobi_monic(n, spec.gamma1, spec.gamma2);
    }
    throw DomainError("unknown ensemble");
}

WeightMomentFunctional::WeightMomentFunctional(EnsembleSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

Rational WeightMomentFunctional::moment(int k) const {
    if (k < 0) throw DomainError("negative moment index");
    while (static_cast<int>(cache_.size()) <= k) {
        const int j = static_cast<int>(cache_.size());
        Rational m;
        switch (spec_.kind) {
            case Family::Hermite:
                if (j == 0) m = Rational(1);
                else if (j == 1) m = Rational(0);
                else m = cache_[static_cast<std::size_t>(j - 2)] * Rational(Integer(j - 1), Integer(spec_.N));
                break;
            case Family::Laguerre:
                m = j == 0 ? Rational(1)
                           : cache_.back() * (spec_.gamma + Rational(j)) / Rational(2 * spec_.N);
                break;
            case Family::Jacobi:
                m = j == 0 ? Rational(1)
                           : cache_.back() * (spec_.gamma1 + Rational(j)) /
                                 (spec_.gamma1 + spec_.gamma2 + Rational(j + 1));
                break;
        }
        cache_.push_back(m);
    }
    return cache_[static_cast<std::size_t>(k)];
}

Rational WeightMomentFunctional::integrate(const Polynomial& f) const {
    Rational total;
    for (int k = 0; k <= f.degree(); ++k) {
        const Rational& c = f.coefficients()[static_cast<std::size_t>(k)];
        if (!c.is_zero()) total += c * moment(k);
    }
    return total;
}

Rational WeightMomentFunctional::inner(const Polynomial& f, const Polynomial& g) const { return integrate(f * g); }

std::string WeightMomentFunctional::unit() const {
    switch (spec_.kind) {
        case Family::Hermite: return "sqrt(2*pi/" + std::to_string(spec_.N) + ")";
        case Family::Laguerre:
            return "Gamma(" + (spec_.gamma + Rational(1)).str() + ")/" + std::to_string(2 * spec_.N) + "^(" +
                   (spec_.gamma + Rational(1)).str() + ")";
        case Family::Jacobi:
            return "Beta(" + (spec_.gamma1 + Rational(1)).str() + "," + (spec_.gamma2 + Rational(1)).str() + ")";
    }
    return "?";
}

Rational monic_norm(const EnsembleSpec& spec, int n) {
    if (n < 0) throw DomainError("negative degree");
    switch (spec.kind) {
        case Family::Hermite:
            // ∫ H_n² e^{-x²/2} = sqrt(2π) n!; x -> sqrt(N) x.
            return Rational(factorial(n)) / Rational(spec.N).pow(n);
        case Family::Laguerre:
            // ∫ L_n² x^γ e^{-x} = Γ(n+γ+1)/n!; x -> 2N x and the monic rescaling.
            return Rational(factorial(n)) * rising(spec.gamma + Rational(1), n) / Rational(2 * spec.N).pow(2 * n);
        case Family::Jacobi: {
            const Rational a = spec.gamma1, b = spec.gamma2, s = a + b;
            if (n == 0) return Rational(1);
            const Rational classical = rising(a + Rational(1), n) * rising(b + Rational(1), n) /
                                       (Rational(factorial(n)) * (Rational(2 * n + 1) + s) *
                                        rising(s + Rational(2), n - 1));
            const Rational scale = Rational(factorial(n)) / rising(s + Rational(n + 1), n);
            return classical * scale * scale;
        }
    }
    throw DomainError("unknown ensemble");
}

OrthogonalityReport check_orthogonality(const EnsembleSpec& spec, int n_max) {
    if (n_max < 0 || n_max > 12) throw RangeError("check_orthogonality supports 0 <= n_max <= 12");
    const WeightMomentFunctional functional(spec);
    std::vector<Polynomial> basis;
    for (int n = 0; n <= n_max; ++n) basis.push_back(monic_polynomial(spec, n));

    OrthogonalityReport report;
    report.n_max = n_max;
    report.unit = functional.unit();
    report.orthogonal = true;
    report.norms_match = true;
    report.gram.assign(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        report.expected_norms.push_back(monic_norm(spec, static_cast<int>(i)));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            report.gram[i][j] = functional.inner(basis[i], basis[j]);
            if (i != j && !report.gram[i][j].is_zero()) report.orthogonal = false;
        }
        if (report.gram[i][i] != report.expected_norms[i]) report.norms_match = false;
    }
    return report;
}

}  // namespace rmt
