#include "rmt_oracle/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rmt/errors.hpp"

namespace rmt::oracle {

MultiPoly MultiPoly::constant(int nVars, const Rational& c) {
    MultiPoly p(nVars);
    p.add_term(Exponents(static_cast<std::size_t>(nVars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nVars, int index) {
    MultiPoly p(nVars);
    Exponents e(static_cast<std::size_t>(nVars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::evaluate(std::span<const Rational> points) const {
    if (points.size() != static_cast<std::size_t>(nVars_)) throw DimensionError("wrong number of points");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) term *= points[i].pow(e[i]);
        total += term;
    }
    return total;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nVars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.nVars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly vandermonde(int nVars) {
    MultiPoly v = MultiPoly::constant(nVars, Rational(1));
    for (int i = 0; i < nVars; ++i) {
        for (int j = i + 1; j < nVars; ++j) {
            v = v * (MultiPoly::variable(nVars, i) - MultiPoly::variable(nVars, j));
        }
    }
    return v;
}

MultiPoly elementary(int nVars, int k) {
    MultiPoly out(nVars);
    if (k < 0 || k > nVars) return out;
    std::vector<int> mask(static_cast<std::size_t>(nVars), 0);
    std::fill(mask.end() - k, mask.end(), 1);
    do {
        out.add_term(mask, Rational(1));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

namespace {

// Fills the shape cell by cell (row-major) with values in 1..maxEntry.
void enumerate_ssyt(const Partition& shape, int maxEntry,
                    const std::function<void(const std::vector<int>& content)>& visit) {
    std::vector<std::vector<int>> t;
    for (int part : shape.parts()) t.emplace_back(static_cast<std::size_t>(part), 0);
    std::vector<int> content(static_cast<std::size_t>(maxEntry), 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    }
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(content);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= maxEntry; ++v) {
            t[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            rec(idx + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0);
}

}  // namespace

MultiPoly schur_tableaux(const Partition& lambda, int nVars) {
    MultiPoly out(nVars);
    if (lambda.length() > nVars) return out;
    enumerate_ssyt(lambda, nVars, [&](const std::vector<int>& content) { out.add_term(content, Rational(1)); });
    if (lambda.empty()) out = MultiPoly::constant(nVars, Rational(1));
    return out;
}

long kostka_tableaux(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    if (lambda.empty()) return 1;
    long count = 0;
    const std::vector<int>& target = mu.parts();
    enumerate_ssyt(lambda, mu.length(), [&](const std::vector<int>& content) {
        if (content == target) ++count;
    });
    return count;
}

long standard_tableaux(const Partition& lambda) {
    static std::map<std::vector<int>, long> memo;
    if (lambda.weight() <= 1) return 1;
    if (auto it = memo.find(lambda.parts()); it != memo.end()) return it->second;
    long total = 0;
    const auto& parts = lambda.parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
        if (!corner) continue;
        std::vector<int> smaller = parts;
        --smaller[r];
        total += standard_tableaux(Partition(smaller));
    }
    memo[parts] = total;
    return total;
}

Integer character_frobenius(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight()) throw DomainError("weights differ");
    const int n = std::max(1, lambda.length());
    MultiPoly f = vandermonde(n);
    for (int part : rho.parts()) {
        MultiPoly power(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = part;
            power.add_term(e, Rational(1));
        }
        f = f * power;
    }
    MultiPoly::Exponents target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + n - 1 - i;
    return f.coefficient(target).numerator();
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

std::map<Partition, long> class_sizes(int n) {
    std::map<Partition, long> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++out[cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Rational det_cofactor(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor(r - 1, cc++) = m(r, k);
            }
        }
        const Rational term = m(0, c) * det_cofactor(minor);
        total += c % 2 == 0 ? term : -term;
    }
    return total;
}

Rational weight_moment(const EnsembleSpec& spec, int k) {
    switch (spec.kind) {
        case Family::Hermite: {
            if (k % 2 != 0) return Rational(0);
            // (k-1)!! / N^{k/2}
            Rational r(1);
            for (int j = k - 1; j > 0; j -= 2) r *= Rational(j);
            return r / Rational(spec.N).pow(k / 2);
        }
        case Family::Laguerre: {
            Rational r(1);
            for (int j = 0; j < k; ++j) r *= (spec.gamma + Rational(j + 1)) / Rational(2 * spec.N);
            return r;
        }
        case Family::Jacobi: {
            Rational r(1);
            const Rational s = spec.gamma1 + spec.gamma2;
            for (int j = 0; j < k; ++j) r *= (spec.gamma1 + Rational(j + 1)) / (s + Rational(j + 2));
            return r;
        }
    }
    return Rational(0);
}

namespace {

Rational integrate_monomials(const MultiPoly& f, const std::vector<Rational>& moments) {
    Rational total(0);
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (int k : e) {
            term *= moments[static_cast<std::size_t>(k)];
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

int max_degree(const MultiPoly& f) {
    int d = 0;
    for (const auto& [e, c] : f.terms()) {
        for (int k : e) d = std::max(d, k);
    }
    return d;
}

}  // namespace

Rational expectation(const EnsembleSpec& spec, const MultiPoly& f) {
    if (f.n_vars() > 5) throw ResourceError("explicit expansion is limited to 5 variables");
    const MultiPoly v = vandermonde(f.n_vars());
    const MultiPoly v2 = v * v;
    const MultiPoly num = f * v2;
    const int deg = std::max(max_degree(num), max_degree(v2));
    std::vector<Rational> moments;
    for (int k = 0; k <= deg; ++k) moments.push_back(weight_moment(spec, k));
    return integrate_monomials(num, moments) / integrate_monomials(v2, moments);
}

Rational correlation(const EnsembleSpec& spec, std::span<const Rational> points) {
    MultiPoly f = MultiPoly::constant(spec.N, Rational(1));
    for (const Rational& t : points) {
        for (int i = 0; i < spec.N; ++i) {
            f = f * (MultiPoly::constant(spec.N, t) - MultiPoly::variable(spec.N, i));
        }
    }
    return expectation(spec, f);
}

Rational secular_product(const EnsembleSpec& spec, const Partition& lambda) {
    MultiPoly f = MultiPoly::constant(spec.N, Rational(1));
    for (int part : lambda.parts()) f = f * elementary(spec.N, part);
    return expectation(spec, f);
}

std::vector<Polynomial> hermite_by_recurrence(int maxDegree, int N) {
    std::vector<Polynomial> h;
    h.emplace_back(Rational(1));
    if (maxDegree >= 1) h.push_back(Polynomial::variable());
    for (int n = 1; n < maxDegree; ++n) {
        h.push_back(Polynomial::variable() * h[static_cast<std::size_t>(n)] -
                    h[static_cast<std::size_t>(n - 1)] * Rational(n, N));
    }
    return h;
}

Rational gue_kernel(int N, const Rational& x, const Rational& y) {
    const auto h = hermite_by_recurrence(N, N);
    Rational total(0);
    Rational weight(1);  // N^k / k!
    for (int k = 0; k < N; ++k) {
        if (k > 0) weight *= Rational(N, k);
        total += weight * h[static_cast<std::size_t>(k)](x) * h[static_cast<std::size_t>(k)](y);
    }
    return total;
}

double gue_moment_quadrature(int N, int power, double t, int nodes, double half_width) {
    if (N < 1 || N > 3) throw ResourceError("quadrature oracle supports N <= 3");
    const double h = 2.0 * half_width / (nodes - 1);
    std::vector<double> x(static_cast<std::size_t>(nodes));
    std::vector<double> w(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        x[static_cast<std::size_t>(i)] = -half_width + h * i;
        w[static_cast<std::size_t>(i)] = std::exp(-0.5 * N * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)]);
    }
    double num = 0.0;
    double den = 0.0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(N), 0);
    while (true) {
        double vand = 1.0;
        double weight = 1.0;
        double charp = 1.0;
        for (int i = 0; i < N; ++i) {
            const double xi = x[idx[static_cast<std::size_t>(i)]];
            weight *= w[idx[static_cast<std::size_t>(i)]];
            charp *= t - xi;
            for (int j = i + 1; j < N; ++j) vand *= xi - x[idx[static_cast<std::size_t>(j)]];
        }
        const double base = vand * vand * weight;
        den += base;
        num += base * std::pow(charp, power);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == x.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return num / den;
}

}  // namespace rmt::oracle
