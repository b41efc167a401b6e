#include "rmt/expansions.hpp"

#include <sstream>

#include "rmt/errors.hpp"
#include "rmt/matrix.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"

namespace rmt {

namespace {

Rational signed_power(const Rational& base, long e) { return base.pow(e); }

Rational hermite_entry(long d) {
    if (d < 0 || d % 2 != 0) return Rational(0);
    return inverse_factorial(d / 2);
}

Rational laguerre_entry(long d) {
    if (d < 0) return Rational(0);
    return inverse_factorial(d);
}

void require_vars(const Partition& lambda, int nVars) {
    if (nVars < 0) throw DomainError("number of variables must be non-negative");
    if (lambda.length() > nVars) {
        throw DomainError("partition " + lambda.str() + " is longer than the number of variables (" +
                          std::to_string(nVars) + ")");
    }
}

}  // namespace

Rational d_matrix(DFamily family, const Partition& lambda, const Partition& nu,
                  const DParams& params) {
    const bool jacobi = family == DFamily::Jacobi || family == DFamily::JacobiTilde;
    const long n = jacobi ? params.nVars : lambda.length();
    if (jacobi && (lambda.length() > n || nu.length() > n)) {
        throw DomainError("Jacobi D determinant needs l(λ), l(ν) <= number of variables");
    }
    // ν longer than λ cannot sit inside it; the truncated matrix would hide that
    if (!jacobi && nu.length() > n) return Rational(0);
    const std::size_t size = static_cast<std::size_t>(n);
    Matrix m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
            const long d = static_cast<long>(lambda[j]) - nu[k] - static_cast<long>(j) +
                           static_cast<long>(k);
            switch (family) {
                case DFamily::Hermite:
                    m(j, k) = hermite_entry(d);
                    break;
                case DFamily::Laguerre:
                    m(j, k) = laguerre_entry(d);
                    break;
                case DFamily::Jacobi: {
                    if (d < 0) break;
                    // 1-based k: a_k = 2ν_k + 2n - 2k + s + 2
                    const Rational a = Rational(2L * nu[k] + 2 * n - 2 * static_cast<long>(k + 1) + 2) +
                                       params.s;
                    m(j, k) = inverse_factorial(d) / rising(a, d);
                    break;
                }
                case DFamily::JacobiTilde: {
                    if (d < 0) break;
                    const Rational c = Rational(2L * lambda[j] + 2 * n - 2 * static_cast<long>(j + 1) + 1) +
                                       params.s;
                    const Rational poch = rising(c - Rational(d), d);
                    if (poch.is_zero()) {
                        throw DomainError("Jacobi dual determinant hits a pole of the Gamma function");
                    }
                    m(j, k) = inverse_factorial(d) / poch;
                    break;
                }
            }
        }
    }
    return det_exact(m);
}

Rational g_ratio(const Partition& lambda, const Partition& nu, int n, const Rational& shift) {
    Rational r(1);
    for (int j = 1; j <= n; ++j) {
        const std::size_t i = static_cast<std::size_t>(j - 1);
        const long len = static_cast<long>(lambda[i]) - nu[i];
        if (len < 0) throw DomainError("g_ratio needs ν ⊆ λ");
        r *= rising(Rational(nu[i] + n - j + 1) + shift, len);
    }
    return r;
}

Rational psi(const EnsembleSpec& spec, const Partition& lambda, const Partition& nu, int nVars) {
    spec.validate();
    require_vars(lambda, nVars);
    if (!lambda.contains(nu)) return Rational(0);
    const long diff = lambda.weight() - nu.weight();
    const Rational twoN(2 * spec.N);
    switch (spec.kind) {
        case Family::Hermite: {
            if (diff % 2 != 0) return Rational(0);
            return twoN.inverse().pow(diff / 2) * Rational(c_lambda(lambda, nVars)) /
                   Rational(c_lambda(nu, nVars)) * d_matrix(DFamily::Hermite, lambda, nu);
        }
        case Family::Laguerre:
            return twoN.inverse().pow(diff) * g_ratio(lambda, nu, nVars, spec.gamma) *
                   g_ratio(lambda, nu, nVars, Rational(0)) * d_matrix(DFamily::Laguerre, lambda, nu);
        case Family::Jacobi:
            return g_ratio(lambda, nu, nVars, spec.gamma1) * g_ratio(lambda, nu, nVars, Rational(0)) *
                   d_matrix(DFamily::Jacobi, lambda, nu, {nVars, spec.gamma1 + spec.gamma2});
    }
    return Rational(0);
}

Rational upsilon(const EnsembleSpec& spec, const Partition& lambda, const Partition& nu,
                 int nVars) {
    spec.validate();
    require_vars(lambda, nVars);
    if (!lambda.contains(nu)) return Rational(0);
    const long diff = lambda.weight() - nu.weight();
    const Rational minusInv = -Rational(2 * spec.N).inverse();
    switch (spec.kind) {
        case Family::Hermite: {
            if (diff % 2 != 0) return Rational(0);
            return signed_power(minusInv, diff / 2) * Rational(c_lambda(lambda, nVars)) /
                   Rational(c_lambda(nu, nVars)) * d_matrix(DFamily::Hermite, lambda, nu);
        }
        case Family::Laguerre:
            return signed_power(minusInv, diff) * g_ratio(lambda, nu, nVars, spec.gamma) *
                   g_ratio(lambda, nu, nVars, Rational(0)) * d_matrix(DFamily::Laguerre, lambda, nu);
        case Family::Jacobi: {
            const Rational sign = (lambda.weight() + nu.weight()) % 2 == 0 ? Rational(1) : Rational(-1);
            return sign * g_ratio(lambda, nu, nVars, spec.gamma1) *
                   g_ratio(lambda, nu, nVars, Rational(0)) *
                   d_matrix(DFamily::JacobiTilde, lambda, nu, {nVars, spec.gamma1 + spec.gamma2});
        }
    }
    return Rational(0);
}

std::string direction_name(Direction d) { return d == Direction::Psi ? "psi" : "upsilon"; }

ExpansionTable::ExpansionTable(EnsembleSpec spec, Direction direction, int nVars)
    : spec_(std::move(spec)), direction_(direction), nVars_(nVars) {
    spec_.validate();
    if (nVars_ < 0) throw DomainError("number of variables must be non-negative");
}

Rational ExpansionTable::at(const Partition& lambda, const Partition& nu) const {
    auto key = std::make_pair(lambda, nu);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Rational value = direction_ == Direction::Psi ? psi(spec_, lambda, nu, nVars_)
                                                  : upsilon(spec_, lambda, nu, nVars_);
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
}

std::vector<ExpansionTable::Entry> ExpansionTable::slice(int boxN, int boxP) const {
    std::vector<Entry> out;
    for (const auto& lambda : partitions_in_box(boxN, boxP)) {
        if (lambda.length() > nVars_) continue;
        for (const auto& nu : subpartitions(lambda)) {
            Rational v = at(lambda, nu);
            if (!v.is_zero()) out.push_back({lambda, nu, std::move(v)});
        }
    }
    return out;
}

std::string ExpansionTable::csv(int boxN, int boxP) const {
    std::ostringstream os;
    os << "lambda,nu,value\n";
    for (const auto& e : slice(boxN, boxP)) {
        os << '"' << e.lambda.json() << "\",\"" << e.nu.json() << "\"," << e.value.str() << '\n';
    }
    return os.str();
}

std::size_t ExpansionTable::cached() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

std::shared_ptr<ExpansionTable> expansion_table(const EnsembleSpec& spec, Direction direction,
                                                int nVars) {
    static std::mutex registryMutex;
    static std::map<std::string, std::shared_ptr<ExpansionTable>> registry;
    const std::string key = spec.key() + '|' + direction_name(direction) + '|' + std::to_string(nVars);
    std::lock_guard lock(registryMutex);
    auto& slot = registry[key];
    if (!slot) slot = std::make_shared<ExpansionTable>(spec, direction, nVars);
    return slot;
}

Rational phi_eval(const EnsembleSpec& spec, const Partition& lambda,
                  std::span<const Rational> points) {
    const int n = static_cast<int>(points.size());
    require_vars(lambda, n);
    auto table = expansion_table(spec, Direction::Upsilon, n);
    Rational total(0);
    for (const auto& nu : subpartitions(lambda)) {
        Rational coeff = table->at(lambda, nu);
        if (coeff.is_zero()) continue;
        total += coeff * schur_eval(nu, points);
    }
    return total;
}

Rational phi_eval_determinant(const EnsembleSpec& spec, const Partition& lambda,
                              std::span<const Rational> points) {
    const std::size_t n = points.size();
    require_vars(lambda, static_cast<int>(n));
    Rational vandermonde(1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) vandermonde *= points[j] - points[k];
    }
    if (vandermonde.is_zero()) throw DomainError("determinant route needs pairwise distinct points");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial phi = monic_polynomial(spec, lambda[j] + static_cast<int>(n - 1 - j));
        for (std::size_t k = 0; k < n; ++k) m(j, k) = phi(points[k]);
    }
    return det_exact(m) / vandermonde;
}

}  // namespace rmt
