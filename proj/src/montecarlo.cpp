#include "rmt/montecarlo.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <thread>

#include "rmt/errors.hpp"

namespace rmt {

std::string describe(const Functional& f) {
    std::ostringstream os;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, MomentFunctional>) {
                os << "moment(p=" << g.power << ",t=";
                for (std::size_t i = 0; i < g.points.size(); ++i) os << (i ? ";" : "") << g.points[i];
                os << ")";
            } else if constexpr (std::is_same_v<T, SecularFunctional>) {
                os << "secular_product(" << g.lambda.json() << ")";
            } else {
                os << "trace(k=" << g.power << ")";
            }
        },
        f);
    return os.str();
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

int integer_parameter(const Rational& r, const char* name) {
    if (r.denominator() != 1 || r < Rational(0)) {
        throw DomainError(std::string("Monte Carlo needs a non-negative integer ") + name + ", got " + r.str());
    }
    return static_cast<int>(r.numerator().get_si());
}

Eigen::MatrixXcd complex_gaussian(int rows, int cols, double sd, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, sd);
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = {re, im};
        }
    }
    return g;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::vector<double> sample_spectrum(const EnsembleSpec& spec, std::mt19937_64& rng) {
    const int N = spec.N;
    switch (spec.kind) {
        case Family::Hermite: {
            std::normal_distribution<double> diag(0.0, std::sqrt(1.0 / N));
            std::normal_distribution<double> off(0.0, std::sqrt(0.5 / N));
            Eigen::MatrixXcd h(N, N);
            for (int i = 0; i < N; ++i) {
                h(i, i) = diag(rng);
                for (int j = i + 1; j < N; ++j) {
                    const double re = off(rng);
                    const double im = off(rng);
                    h(i, j) = {re, im};
                    h(j, i) = {re, -im};
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            return to_vector(es.eigenvalues());
        }
        case Family::Laguerre: {
            const int g = integer_parameter(spec.gamma, "gamma");
            const Eigen::MatrixXcd G = complex_gaussian(N, N + g, std::sqrt(0.5), rng);
            const Eigen::MatrixXcd W = G * G.adjoint() / (2.0 * N);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(W, Eigen::EigenvaluesOnly);
            return to_vector(es.eigenvalues());
        }
        case Family::Jacobi: {
            const int g1 = integer_parameter(spec.gamma1, "gamma1");
            const int g2 = integer_parameter(spec.gamma2, "gamma2");
            const Eigen::MatrixXcd Ga = complex_gaussian(N, N + g1, std::sqrt(0.5), rng);
            const Eigen::MatrixXcd Gb = complex_gaussian(N, N + g2, std::sqrt(0.5), rng);
            const Eigen::MatrixXcd A = Ga * Ga.adjoint();
            const Eigen::MatrixXcd S = A + Gb * Gb.adjoint();
            // A v = x S v through the Cholesky factor of S
            const Eigen::LLT<Eigen::MatrixXcd> llt(S);
            const Eigen::MatrixXcd L = llt.matrixL();
            const Eigen::MatrixXcd Linv = L.inverse();
            const Eigen::MatrixXcd C = Linv * A * Linv.adjoint();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(C, Eigen::EigenvaluesOnly);
            return to_vector(es.eigenvalues());
        }
    }
    return {};
}

namespace {

// Product kept as (log|x|, sign) until the end.
struct LogValue {
    double log = 0;
    int sign = 1;

    void times(double x) {
        if (x == 0) {
            sign = 0;
            return;
        }
        log += std::log(std::abs(x));
        if (x < 0) sign = -sign;
    }
};

double finish(const LogValue& v, bool& overflowed) {
    if (v.sign == 0) return 0;
    if (v.log > 700) {
        overflowed = true;
        return v.sign * HUGE_VAL;
    }
    return v.sign * std::exp(v.log);
}

// e_k of the eigenvalues by the usual one-pass recurrence.
std::vector<double> elementary_all(const std::vector<double>& x, int maxK) {
    std::vector<double> e(static_cast<std::size_t>(maxK) + 1, 0.0);
    e[0] = 1;
    for (double xi : x) {
        for (int k = maxK; k >= 1; --k) e[static_cast<std::size_t>(k)] += xi * e[static_cast<std::size_t>(k - 1)];
    }
    return e;
}

}  // namespace

double evaluate(const Functional& f, const std::vector<double>& x, bool& overflowed) {
    return std::visit(
        [&](const auto& g) -> double {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, MomentFunctional>) {
                LogValue v;
                for (double t : g.points) {
                    for (double xi : x) {
                        for (int k = 0; k < g.power; ++k) v.times(t - xi);
                    }
                }
                return finish(v, overflowed);
            } else if constexpr (std::is_same_v<T, SecularFunctional>) {
                const int top = g.lambda.empty() ? 0 : g.lambda[0];
                if (top > static_cast<int>(x.size())) return 0;
                const auto e = elementary_all(x, top);
                LogValue v;
                for (int part : g.lambda.parts()) v.times(e[static_cast<std::size_t>(part)]);
                return finish(v, overflowed);
            } else {
                double s = 0;
                for (double xi : x) s += std::pow(xi, g.power);
                return s / static_cast<double>(x.size());
            }
        },
        f);
}

namespace {

struct Moments {
    long n = 0;
    double mean = 0;
    double m2 = 0;
    bool overflowed = false;

    void push(double v) {
        ++n;
        const double d = v - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (v - mean);
    }

    static Moments merge(const Moments& a, const Moments& b) {
        if (a.n == 0) return b;
        if (b.n == 0) return a;
        Moments r;
        r.n = a.n + b.n;
        const double d = b.mean - a.mean;
        const double fb = static_cast<double>(b.n) / static_cast<double>(r.n);
        r.mean = a.mean + d * fb;
        r.m2 = a.m2 + b.m2 + d * d * static_cast<double>(a.n) * fb;
        r.overflowed = a.overflowed || b.overflowed;
        return r;
    }
};

Moments run_chunk(const MCConfig& c, const Functional& f, long chunk) {
    Moments m;
    const long begin = chunk * kChunkSize;
    const long end = std::min(c.samples, begin + kChunkSize);
    for (long i = begin; i < end; ++i) {
        std::mt19937_64 rng(stream_seed(c.seed, static_cast<std::uint64_t>(i)));
        bool over = false;
        m.push(evaluate(f, sample_spectrum(c.spec, rng), over));
        m.overflowed = m.overflowed || over;
    }
    return m;
}

}  // namespace

MCEstimate estimate(const MCConfig& c, const Functional& f) {
    c.spec.validate();
    if (c.samples < 1) throw DomainError("samples must be at least 1");
    if (c.workers < 1) throw DomainError("workers must be at least 1");
    if (c.spec.kind == Family::Laguerre) integer_parameter(c.spec.gamma, "gamma");
    if (c.spec.kind == Family::Jacobi) {
        integer_parameter(c.spec.gamma1, "gamma1");
        integer_parameter(c.spec.gamma2, "gamma2");
    }
    const long chunks = (c.samples + kChunkSize - 1) / kChunkSize;
    std::vector<Moments> parts(static_cast<std::size_t>(chunks));
    const int workers = static_cast<int>(std::min<long>(c.workers, chunks));
    auto work = [&](int w) {
        for (long k = w; k < chunks; k += workers) parts[static_cast<std::size_t>(k)] = run_chunk(c, f, k);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    while (parts.size() > 1) {
        std::vector<Moments> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(Moments::merge(parts[i], parts[i + 1]));
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts.swap(next);
    }
    const Moments& m = parts.front();
    MCEstimate out;
    out.functional = describe(f);
    out.samples = m.n;
    out.mean = m.mean;
    out.stderr_ = m.n > 1 ? std::sqrt(m.m2 / static_cast<double>(m.n - 1) / static_cast<double>(m.n)) : 0.0;
    out.overflowed = m.overflowed || !std::isfinite(out.mean);
    return out;
}

}  // namespace rmt
