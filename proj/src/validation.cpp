#include "rmt/validation.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "rmt/asymptotics.hpp"
#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/matrix.hpp"
#include "rmt/moments.hpp"
#include "rmt/montecarlo.hpp"
#include "rmt/ortho_poly.hpp"
#include "rmt/schur.hpp"
#include "rmt/secular.hpp"
#include "rmt/symmetric_group.hpp"
#include "rmt_oracle/oracles.hpp"

namespace rmt {

Budget parse_budget(const std::string& text) {
    if (text == "small") return Budget::Small;
    if (text == "full") return Budget::Full;
    throw DomainError("budget must be small or full, got '" + text + "'");
}

std::string budget_name(Budget b) { return b == Budget::Small ? "small" : "full"; }

Budget budget_from_env(Budget fallback) {
    const char* env = std::getenv("RMT_CHARPOLY_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    return parse_budget(env);
}

namespace {

using Clock = std::chrono::steady_clock;

// Counts comparisons and keeps the first few failures for the detail line.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failures_.size() < 3) failures_.push_back(what());
    }

    bool ok() const { return failed_ == 0 && total_ > 0; }

    std::string summary() const {
        std::ostringstream os;
        os << (total_ - failed_) << "/" << total_ << " checks";
        for (const auto& f : failures_) os << "; " << f;
        return os.str();
    }

private:
    long total_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

CheckResult finish(const std::string& name, const Tally& t, Clock::time_point start, const std::string& extra = "") {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream os;
    os << t.summary();
    if (!extra.empty()) os << "; " << extra;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " (" << secs << " s)";
    return {name, t.ok(), os.str()};
}

std::vector<Rational> random_points(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    while (true) {
        std::vector<Rational> pts;
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(num(rng), den(rng));
        if (pairwise_distinct(pts)) return pts;
    }
}

std::vector<EnsembleSpec> three_ensembles(int N) {
    return {EnsembleSpec::gue(N), EnsembleSpec::lue(N, Rational(3, 2)), EnsembleSpec::jue(N, Rational(1, 2), 1)};
}

// 1. Three moment routes agree exactly.
CheckResult route_agreement(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 8 : 4;
    const std::vector<Rational> ts{Rational(0), Rational(1, 2), Rational(-3, 7)};
    for (int N = 2; N <= nMax; ++N) {
        for (const auto& spec : three_ensembles(N)) {
            for (int p = 1; p <= 3; ++p) {
                const Polynomial sum = moment_poly(spec, p);
                for (const auto& x : ts) {
                    const Rational v = sum(x);
                    const Rational det = moment_derivative_det(spec, p, x);
                    const Rational phi = moment_box_phi(spec, p, x);
                    t.expect(v == det && v == phi, [&] {
                        return spec.key() + " p=" + std::to_string(p) + " t=" + x.str() + ": " + v.str() + " / " +
                               det.str() + " / " + phi.str();
                    });
                }
            }
        }
    }
    return finish("route agreement", t, start);
}

// 2. GUE at the origin against the explicit integral and quadrature.
CheckResult origin_closed_form(Budget) {
    const auto start = Clock::now();
    Tally t;
    const Rational formula = gue_moment_t0(2, 1);
    t.expect(formula == Rational(3, 4), [&] { return "closed form gives " + formula.str(); });
    const std::vector<Rational> origin{Rational(0), Rational(0)};
    const Rational integral = oracle::correlation(EnsembleSpec::gue(2), origin);
    t.expect(integral == formula, [&] { return "explicit integral gives " + integral.str(); });
    const double quad = oracle::gue_moment_quadrature(2, 2, 0.0);
    t.expect(std::abs(quad - 0.75) <= 1e-12, [&] {
        std::ostringstream os;
        os.precision(17);
        os << "quadrature gives " << quad;
        return os.str();
    });
    std::ostringstream extra;
    extra.precision(3);
    extra << "value " << formula.str() << ", quadrature error " << std::abs(quad - 0.75);
    return finish("origin closed form", t, start, extra.str());
}

// 3. p = 1 parity average reproduces the semicircle through t^10.
CheckResult semicircle_p1(Budget) {
    const auto start = Clock::now();
    Tally t;
    const auto report = semicircle_recovery(1, 10, 9, SeriesSource::Stored);
    const Rational expected[] = {Rational(1),         Rational(-1, 8),      Rational(-1, 128),
                                 Rational(-1, 1024), Rational(-5, 32768), Rational(-7, 262144)};
    std::string got;
    for (std::size_t j = 0; j < 6 && j < report.rows.size(); ++j) {
        const auto& row = report.rows[j];
        got += (j ? ", " : "") + row.recovered.str();
        t.expect(row.recovered == expected[j] && row.positive_powers_vanish,
                 [&] { return "t^" + std::to_string(row.power) + " gives " + row.recovered.str(); });
    }
    t.expect(report.rows.size() == 6, [] { return std::string("wrong number of rows"); });
    return finish("semicircle recovery p=1", t, start, "coefficients " + got);
}

// 4. Parity structure through t^2 for p = 1, 2, 3.
CheckResult parity_structure(Budget) {
    const auto start = Clock::now();
    Tally t;
    for (int p = 1; p <= 3; ++p) {
        const Rational P(p);
        const Polynomial even = gue_bracket_polynomial(p, 1, Parity::Even);
        const Polynomial odd = gue_bracket_polynomial(p, 1, Parity::Odd);
        t.expect(even.is_zero(), [&] { return "even t^2 bracket for p=" + std::to_string(p) + " is " + even.str(); });
        t.expect(odd == Polynomial({Rational(0), P}),
                 [&] { return "odd t^2 bracket for p=" + std::to_string(p) + " is " + odd.str(); });
        // odd t² coefficient of the normalised moment: Np + p²(2p²-1)/3 + O(1/N)
        const auto so = cd_series(p, Parity::Odd, 1);
        const Rational lead = odd.coefficient(1);
        const Rational sub = odd.coefficient(1) * so[1];
        t.expect(lead == P && sub == P * P * (Rational(2) * P * P - Rational(1)) / Rational(3),
                 [&] { return "odd t^2 expansion for p=" + std::to_string(p) + ": " + lead.str() + " N + " + sub.str(); });
        const auto r = semicircle_recovery(p, 2, recovery_required_order(p, 2) + 1, SeriesSource::Stored);
        t.expect(r.rows[0].recovered == Rational(1) && r.rows[1].recovered == -P * P / Rational(8) &&
                     r.rows[1].positive_powers_vanish,
                 [&] { return "averaged t^2 for p=" + std::to_string(p) + " is " + r.rows[1].recovered.str(); });
        const Rational subLeading = r.rows[0].normalized.at(-1);
        t.expect(subLeading == P * (Rational(8) * P * P - Rational(1)) / Rational(12),
                 [&] { return "sub-leading for p=" + std::to_string(p) + " is " + subLeading.str(); });
    }
    return finish("parity structure through t^2", t, start);
}

// 5. D^(H)_{λν} for λ = (N^{2p}) and |ν| <= 4 against the tabulated polynomials.
CheckResult d_table(Budget) {
    const auto start = Clock::now();
    Tally t;
    using Entry = std::function<Rational(const Rational&, const Rational&)>;
    struct Row {
        Partition nu;
        Entry even;
        Entry odd;
    };
    const Rational h(1, 2);
    const Rational one(1);
    const std::vector<Row> rows{
        {Partition{}, [&](auto&, auto&) { return one; }, [&](auto&, auto&) { return one; }},
        {Partition{2}, [](auto& m, auto& p) { return m * p; }, [](auto& m, auto& p) { return m * p; }},
        {Partition{1, 1}, [](auto& m, auto& p) { return -m * p; }, [&](auto& m, auto& p) { return -(m + one) * p; }},
        {Partition{4}, [&](auto& m, auto& p) { return h * m * (m - one) * p * (p + one); },
         [&](auto& m, auto& p) { return h * m * (m - one) * p * (p + one); }},
        {Partition{3, 1}, [&](auto& m, auto& p) { return -h * m * (m - one) * p * (p + one); },
         [&](auto& m, auto& p) { return -h * m * (m + one) * p * (p + one); }},
        {Partition{2, 2}, [](auto& m, auto& p) { return m * m * p * p; },
         [&](auto& m, auto& p) { return m * (m + one) * p * p; }},
        {Partition{2, 1, 1}, [&](auto& m, auto& p) { return -h * m * (m + one) * p * (p - one); },
         [&](auto& m, auto& p) { return -h * m * (m + one) * p * (p - one); }},
        {Partition{1, 1, 1, 1}, [&](auto& m, auto& p) { return h * m * (m + one) * p * (p - one); },
         [&](auto& m, auto& p) { return h * (m + Rational(2)) * (m + one) * p * (p - one); }},
    };
    for (int N = 4; N <= 7; ++N) {
        for (int p = 1; p <= 3; ++p) {
            const Partition box = Partition::rectangle(N, 2 * p);
            const Rational m(N / 2);
            const Rational P(p);
            const Rational base = d_box(N, p);
            for (const auto& row : rows) {
                const Rational got = d_matrix(DFamily::Hermite, box, row.nu);
                const Rational want = (N % 2 == 0 ? row.even(m, P) : row.odd(m, P)) * base;
                t.expect(got == want, [&] {
                    return "N=" + std::to_string(N) + " p=" + std::to_string(p) + " nu=" + row.nu.str() + ": " +
                           (got / base).str() + " vs " + (want / base).str() + " (units of D)";
                });
            }
        }
    }
    return finish("D table", t, start);
}

// 6. Truncation error of the stored series decays like N^{-K-1}.
CheckResult series_order(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int n1 = b == Budget::Full ? 200 : 100;
    std::ostringstream exps;
    exps.precision(3);
    for (int p = 1; p <= 2; ++p) {
        for (int K = 1; K <= 3; ++K) {
            for (Parity par : {Parity::Even, Parity::Odd}) {
                const int off = par == Parity::Even ? 0 : 1;
                const auto r = cd_convergence(p, par, K, n1 + off, 2 * n1 + off);
                exps << " p" << p << "K" << K << parity_name(par)[0] << "=" << r.observed_exponent;
                t.expect(r.within(0.15), [&] {
                    std::ostringstream os;
                    os << "p=" << p << " K=" << K << " " << parity_name(par) << " exponent " << r.observed_exponent;
                    return os.str();
                });
            }
        }
    }
    return finish("asymptotic order", t, start, "exponents" + exps.str());
}

// 7. Classical and generalised dual Cauchy identities.
CheckResult dual_cauchy(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int sets = b == Budget::Full ? 20 : 3;
    std::mt19937 rng(20240607);
    for (int N = 1; N <= 3; ++N) {
        for (int p = 1; p <= 3; ++p) {
            const auto box = partitions_in_box(N, p).collect();
            auto identity = [&](const std::function<Rational(const Partition&, const std::vector<Rational>&)>& f,
                                const std::vector<Rational>& tt, const std::vector<Rational>& x) {
                Rational lhs(1);
                for (const auto& ti : tt) {
                    for (const auto& xj : x) lhs *= ti - xj;
                }
                Rational rhs(0);
                for (const auto& lam : box) {
                    const Partition lt = tilde(lam, N, p);
                    const Rational sign = lt.weight() % 2 == 0 ? Rational(1) : Rational(-1);
                    rhs += sign * f(lam, tt) * f(lt, x);
                }
                return lhs == rhs;
            };
            for (int s = 0; s < sets; ++s) {
                const auto tt = random_points(rng, static_cast<std::size_t>(p));
                const auto x = random_points(rng, static_cast<std::size_t>(N));
                t.expect(identity([](const Partition& l, const std::vector<Rational>& v) { return schur_eval(l, v); },
                                  tt, x),
                         [&] { return "classical N=" + std::to_string(N) + " p=" + std::to_string(p); });
                for (const auto& spec : three_ensembles(N)) {
                    t.expect(identity([&](const Partition& l,
                                          const std::vector<Rational>& v) { return phi_eval(spec, l, v); },
                                      tt, x),
                             [&] { return "generalised " + spec.key() + " p=" + std::to_string(p); });
                }
            }
        }
    }
    return finish("dual Cauchy", t, start);
}

// 8. Ψ and Υ are inverse on a full box.
CheckResult inverse_pair(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int side = b == Budget::Full ? 4 : 3;
    const auto box = partitions_in_box(side, side).collect();
    const std::size_t n = box.size();
    for (const auto& spec : {EnsembleSpec::gue(side), EnsembleSpec::lue(side, Rational(1, 2)),
                             EnsembleSpec::jue(side, 0, 0)}) {
        std::vector<Rational> P(n * n);
        std::vector<Rational> U(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                P[i * n + j] = psi(spec, box[i], box[j], side);
                U[i * n + j] = upsilon(spec, box[i], box[j], side);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!P[i * n + k].is_zero() && !U[k * n + j].is_zero()) s += P[i * n + k] * U[k * n + j];
                }
                t.expect(s == Rational(i == j ? 1 : 0),
                         [&] { return spec.name() + " " + box[i].str() + "," + box[j].str() + " gives " + s.str(); });
            }
        }
    }
    return finish("inverse pair", t, start,
                  "box (" + std::to_string(side) + "^" + std::to_string(side) + "), " + std::to_string(n) + " partitions");
}

// 9. Secular identities and the combinatorial cross-checks.
CheckResult secular_identities(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 12 : 6;
    for (int N = 1; N <= nMax; ++N) {
        for (const auto& spec : three_ensembles(N)) {
            t.expect(secular_generating_check(spec).passed, [&] { return "generating check " + spec.key(); });
        }
        for (int a = 0; a <= std::min(N, 6); ++a) {
            for (int c = 0; c <= std::min(N, 6); ++c) {
                if ((a + c) % 2 == 1) {
                    t.expect(secular_pair_gue(N, a, c).is_zero(), [&] { return "mixed pair not zero"; });
                    t.expect(secular_joint(EnsembleSpec::gue(N), Partition{std::max(a, c), std::min(a, c)}).is_zero(),
                             [&] { return "odd joint not zero"; });
                }
            }
        }
    }
    const Rational joint = secular_joint(EnsembleSpec::gue(2), Partition{2, 2});
    t.expect(joint == Rational(3, 4), [&] { return "joint (2,2) at N=2 is " + joint.str(); });
    t.expect(secular_pair_gue(2, 1, 1, PairClass::Even) == joint, [] { return std::string("pair (1,1) differs"); });
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        const auto classes = oracle::class_sizes(n);
        for (const auto& lam : parts) {
            for (const auto& mu : parts) {
                t.expect(character(lam, mu) == oracle::character_frobenius(lam, mu),
                         [&] { return "character " + lam.str() + " at " + mu.str(); });
                t.expect(kostka(lam, mu) == oracle::kostka_tableaux(lam, mu),
                         [&] { return "Kostka " + lam.str() + "," + mu.str(); });
                Integer inner = 0;
                for (const auto& [rho, size] : classes) inner += Integer(size) * character(lam, rho) * character(mu, rho);
                t.expect(inner == (lam == mu ? factorial(n) : Integer(0)),
                         [&] { return "orthogonality " + lam.str() + "," + mu.str(); });
            }
        }
    }
    return finish("secular identities", t, start);
}

// 10. Monte Carlo against exact values, and worker-count determinism.
CheckResult monte_carlo(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const long samples = b == Budget::Full ? 1000000 : 20000;
    const int workers = 2;
    struct Case {
        std::string label;
        EnsembleSpec spec;
        Functional f;
        Rational exact;
    };
    const auto gue4 = EnsembleSpec::gue(4);
    const auto lue3 = EnsembleSpec::lue(3, 1);
    const auto jue3 = EnsembleSpec::jue(3, 1, 1);
    const std::vector<Case> cases{
        {"GUE N=4 det^2 t=0", gue4, MomentFunctional{2, {0.0}}, moment_poly(gue4, 2)(Rational(0))},
        {"GUE N=4 det^2 t=1/2", gue4, MomentFunctional{2, {0.5}}, moment_poly(gue4, 2)(Rational(1, 2))},
        {"LUE N=3 det t=1", lue3, MomentFunctional{1, {1.0}}, moment_poly(lue3, 1)(Rational(1))},
        {"JUE N=3 det t=1/2", jue3, MomentFunctional{1, {0.5}}, moment_poly(jue3, 1)(Rational(1, 2))},
        {"GUE N=4 sc_2", gue4, SecularFunctional{Partition{2}}, secular_mean(gue4, 2)},
    };
    std::ostringstream zs;
    zs.precision(2);
    std::uint64_t seed = 1001;
    for (const auto& c : cases) {
        const auto e = estimate({c.spec, samples, seed++, workers}, c.f);
        const double exact = c.exact.to_double();
        const double z = (e.mean - exact) / e.stderr_;
        zs << " " << z;
        t.expect(!e.overflowed && std::abs(z) <= 4.0, [&] {
            std::ostringstream os;
            os << c.label << ": mean " << e.mean << " exact " << exact << " z " << z;
            return os.str();
        });
    }
    const long detSamples = b == Budget::Full ? 100000 : 5000;
    const MomentFunctional f{2, {0.5}};
    const auto w1 = estimate({gue4, detSamples, 77, 1}, f);
    for (int w : {2, 8}) {
        const auto ww = estimate({gue4, detSamples, 77, w}, f);
        t.expect(ww.mean == w1.mean && ww.stderr_ == w1.stderr_ && ww.samples == w1.samples,
                 [&] { return "workers=" + std::to_string(w) + " changed the estimate"; });
    }
    return finish("Monte Carlo concordance", t, start, "z-scores" + zs.str());
}

using CriterionFn = CheckResult (*)(Budget);

const std::vector<std::pair<std::string, CriterionFn>>& criteria() {
    static const std::vector<std::pair<std::string, CriterionFn>> list{
        {"route agreement", route_agreement},
        {"origin closed form", origin_closed_form},
        {"semicircle recovery p=1", semicircle_p1},
        {"parity structure through t^2", parity_structure},
        {"D table", d_table},
        {"asymptotic order", series_order},
        {"dual Cauchy", dual_cauchy},
        {"inverse pair", inverse_pair},
        {"secular identities", secular_identities},
        {"Monte Carlo concordance", monte_carlo},
    };
    return list;
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

// Suite-only checks.

CheckResult field_axioms(Budget b) {
    const auto start = Clock::now();
    Tally t;
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    const int n = b == Budget::Full ? 5000 : 500;
    for (int i = 0; i < n; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        const Rational d(num(rng), den(rng));
        t.expect((a + c) * d == a * d + c * d, [] { return std::string("distributivity"); });
        t.expect(a - a == Rational(0), [] { return std::string("additive inverse"); });
        if (!a.is_zero()) t.expect(a * a.inverse() == Rational(1), [] { return std::string("inverse"); });
        t.expect(Rational::parse(a.str()) == a, [&] { return "round trip " + a.str(); });
    }
    return finish("rational field axioms", t, start);
}

CheckResult determinants(Budget b) {
    const auto start = Clock::now();
    Tally t;
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    const std::size_t maxN = b == Budget::Full ? 7 : 5;
    for (std::size_t n = 0; n <= maxN; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
            }
            t.expect(det_exact(m) == oracle::det_cofactor(m), [&] { return "size " + std::to_string(n); });
        }
    }
    return finish("determinant vs cofactor", t, start);
}

CheckResult dimension_sums(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 12 : 8;
    for (int n = 0; n <= nMax; ++n) {
        Integer s = 0;
        for (const auto& lam : partitions_of(n)) s += dim_V(lam) * dim_V(lam);
        t.expect(s == factorial(n), [&] { return "n=" + std::to_string(n); });
    }
    return finish("sum of dim^2 is n!", t, start);
}

CheckResult orthogonality(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 12 : 6;
    for (int N : {1, 3, 5}) {
        for (const auto& spec : {EnsembleSpec::gue(N), EnsembleSpec::lue(N, Rational(1, 2)),
                                 EnsembleSpec::jue(N, Rational(1, 3), 2), EnsembleSpec::jue(N, 0, 0)}) {
            t.expect(check_orthogonality(spec, nMax).ok(), [&] { return spec.key(); });
        }
    }
    return finish("Gram matrices of the monic polynomials", t, start);
}

CheckResult phi_routes(Budget b) {
    const auto start = Clock::now();
    Tally t;
    std::mt19937 rng(8);
    const int side = b == Budget::Full ? 3 : 2;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& spec : three_ensembles(n)) {
            for (const auto& lam : partitions_in_box(side, n).collect()) {
                const auto x = random_points(rng, static_cast<std::size_t>(n));
                t.expect(phi_eval(spec, lam, x) == phi_eval_determinant(spec, lam, x),
                         [&] { return spec.key() + " " + lam.str(); });
            }
        }
    }
    return finish("Phi by Schur basis vs determinant ratio", t, start);
}

CheckResult moment_oracle(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 3 : 2;
    for (int N = 1; N <= nMax; ++N) {
        for (const auto& spec : three_ensembles(N)) {
            for (int p = 1; p <= 3; ++p) {
                const Rational x(2, 3);
                const std::vector<Rational> pts(static_cast<std::size_t>(p), x);
                t.expect(moment_poly(spec, p)(x) == oracle::correlation(spec, pts),
                         [&] { return spec.key() + " p=" + std::to_string(p); });
            }
        }
    }
    return finish("moments vs explicit integral", t, start);
}

CheckResult series_audit(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int pMax = b == Budget::Full ? 19 : 5;
    for (Parity par : {Parity::Even, Parity::Odd}) {
        for (int p = 1; p <= pMax; ++p) {
            const int order = cd_series_stored_order(p);
            const auto s = cd_series(p, par, order);
            const auto r = cd_series_regenerated(p, par, order);
            for (int k = 0; k <= order; ++k) {
                t.expect(s[static_cast<std::size_t>(k)] == r[static_cast<std::size_t>(k)], [&] {
                    return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " " + parity_name(par);
                });
            }
        }
    }
    return finish("stored series vs regenerated", t, start);
}

CheckResult secular_oracle(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const int nMax = b == Budget::Full ? 3 : 2;
    for (int N = 1; N <= nMax; ++N) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& lam : partitions_of(n)) {
                for (const auto& spec : three_ensembles(N)) {
                    const Rational want = oracle::secular_product(spec, lam);
                    const Rational got = spec.kind == Family::Jacobi ? secular_joint_expansion(spec, lam)
                                                                     : secular_joint(spec, lam);
                    t.expect(got == want, [&] { return spec.key() + " " + lam.str(); });
                }
            }
        }
    }
    return finish("joint secular moments vs explicit integral", t, start);
}

CheckResult mc_sampler(Budget b) {
    const auto start = Clock::now();
    Tally t;
    const long samples = b == Budget::Full ? 10000 : 2000;
    const auto e = estimate({EnsembleSpec::gue(50), samples, 3, 1}, TraceFunctional{2});
    t.expect(std::abs(e.mean - 1.0) <= 4 * e.stderr_, [&] { return "E[Tr M^2]/N = " + std::to_string(e.mean); });
    return finish("GUE sampler second moment", t, start);
}

struct Suite {
    std::string name;
    std::vector<int> criteria;
    std::vector<std::pair<std::string, CriterionFn>> extras;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> list{
        {"exact-arith", {}, {{"rational field axioms", field_axioms}, {"determinant vs cofactor", determinants}}},
        {"combinatorics", {}, {{"sum of dim^2 is n!", dimension_sums}}},
        {"ortho-poly", {}, {{"Gram matrices", orthogonality}}},
        {"expansions", {5, 7, 8}, {{"Phi routes", phi_routes}}},
        {"moments", {1, 2}, {{"moments vs explicit integral", moment_oracle}}},
        {"asymptotics", {3, 4, 6}, {{"stored series audit", series_audit}}},
        {"secular", {9}, {{"joint moments vs explicit integral", secular_oracle}}},
        {"montecarlo", {10}, {{"GUE sampler", mc_sampler}}},
        {"criteria", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {}},
    };
    return list;
}

void run_extras(const Suite& s, Budget b, std::vector<CheckResult>& out) {
    for (const auto& [name, fn] : s.extras) {
        CheckResult r = guarded(name, [&] { return fn(b); });
        r.name = name;
        out.push_back(std::move(r));
    }
}

}  // namespace

std::string criterion_title(int k) {
    if (k < 1 || k > kCriterionCount) throw DomainError("criterion index out of range");
    return criteria()[static_cast<std::size_t>(k - 1)].first;
}

CheckResult run_criterion(int k, Budget budget) {
    const auto& entry = criteria().at(static_cast<std::size_t>(k - 1));
    CheckResult r = guarded(entry.first, [&] { return entry.second(budget); });
    r.name = std::to_string(k) + ". " + entry.first;
    return r;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, Budget budget) {
    std::vector<CheckResult> out;
    if (name == "all") {
        for (int k = 1; k <= kCriterionCount; ++k) out.push_back(run_criterion(k, budget));
        for (const auto& s : suites()) run_extras(s, budget, out);
        return out;
    }
    for (const auto& s : suites()) {
        if (s.name != name) continue;
        for (int k : s.criteria) out.push_back(run_criterion(k, budget));
        run_extras(s, budget, out);
        return out;
    }
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace rmt
