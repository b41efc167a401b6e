#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rmt/asymptotics.hpp"
#include "rmt/errors.hpp"
#include "rmt/expansions.hpp"
#include "rmt/moments.hpp"
#include "rmt/montecarlo.hpp"
#include "rmt/secular.hpp"
#include "rmt/serialize.hpp"
#include "rmt/validation.hpp"

namespace {

constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string ensemble = "gue";
    int N = 2;
    int p = 1;
    std::string gamma = "0";
    std::string gamma1 = "0";
    std::string gamma2 = "0";
    std::optional<std::string> t;
    std::string points;
    std::string lambda;
    int tOrder = 10;
    bool tOrderSet = false;
    std::optional<int> nOrder;
    std::string parity = "avg";
    std::string source = "stored";
    std::string route = "partition-sum";
    std::string direction = "psi";
    int boxWidth = 2;
    int boxHeight = 2;
    std::optional<int> nVars;
    std::string functional = "moment";
    long samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string suite = "all";
    std::string format = "json";
    bool asFloat = false;
    std::optional<std::string> budget;
};

// Usage problems found after parsing (bad enum values and the like).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rmt::Budget resolve_budget(const Options& o) {
    if (o.budget) return rmt::parse_budget(*o.budget);
    return rmt::budget_from_env(rmt::Budget::Small);
}

rmt::EnsembleSpec make_spec(const Options& o) {
    rmt::EnsembleSpec spec;
    if (o.ensemble == "gue") {
        spec = rmt::EnsembleSpec::gue(o.N);
    } else if (o.ensemble == "lue") {
        spec = rmt::EnsembleSpec::lue(o.N, rmt::Rational::parse(o.gamma));
    } else if (o.ensemble == "jue") {
        spec = rmt::EnsembleSpec::jue(o.N, rmt::Rational::parse(o.gamma1), rmt::Rational::parse(o.gamma2));
    } else {
        throw UsageError("unknown ensemble '" + o.ensemble + "' (gue, lue, jue)");
    }
    spec.validate();
    return spec;
}

// Small budget caps sizes so a stray command cannot run for hours.
void check_budget(const Options& o, long samples = 0) {
    if (resolve_budget(o) == rmt::Budget::Full) return;
    if (o.N * o.p > 96 || o.N > 48) {
        throw rmt::ResourceError("N=" + std::to_string(o.N) + ", p=" + std::to_string(o.p) +
                                 " exceeds the small budget; pass --budget full");
    }
    if (samples > 1000000) throw rmt::ResourceError("more than 10^6 samples needs --budget full");
}

std::vector<rmt::Rational> parse_list(const std::string& text) {
    std::vector<rmt::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(rmt::Rational::parse(item));
    }
    return out;
}

rmt::Parity parse_parity(const std::string& s) {
    if (s == "even") return rmt::Parity::Even;
    if (s == "odd") return rmt::Parity::Odd;
    throw UsageError("parity must be even, odd or avg");
}

rmt::SeriesSource parse_source(const std::string& s) {
    if (s == "stored") return rmt::SeriesSource::Stored;
    if (s == "regenerated") return rmt::SeriesSource::Regenerated;
    throw UsageError("source must be stored or regenerated");
}

std::string value_text(const rmt::Rational& r, bool asFloat) {
    if (!asFloat) return r.str();
    std::ostringstream os;
    os.precision(17);
    os << r.to_double();
    return os.str();
}

void emit(const rmt::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_moment(const Options& o) {
    const auto spec = make_spec(o);
    check_budget(o);
    std::optional<rmt::Rational> t;
    if (o.t) t = rmt::Rational::parse(*o.t);
    const auto r = rmt::moment(spec, o.p, t, rmt::parse_route(o.route));
    if (o.format == "csv") {
        if (r.value) {
            std::cout << "t,value\n" << t->str() << "," << value_text(*r.value, o.asFloat) << "\n";
        } else {
            std::cout << "power,coefficient\n";
            for (int k = 0; k <= r.polynomial.degree(); ++k) {
                std::cout << k << "," << value_text(r.polynomial.coefficient(static_cast<std::size_t>(k)), o.asFloat)
                          << "\n";
            }
        }
        return 0;
    }
    rmt::Json j;
    j["ensemble"] = rmt::ensemble_json(spec);
    j["N"] = spec.N;
    j["p"] = o.p;
    j["route"] = rmt::route_name(r.route);
    j["coefficients"] = r.polynomial.is_zero() && r.value ? rmt::Json::array()
                                                          : rmt::coefficients_json(r.polynomial, o.asFloat);
    if (t) j["t"] = t->str();
    j["value"] = r.value ? rmt::scalar_json(*r.value, o.asFloat) : rmt::Json(nullptr);
    emit(j);
    return 0;
}

int run_correlation(const Options& o) {
    const auto spec = make_spec(o);
    check_budget(o);
    const auto pts = parse_list(o.points);
    if (pts.empty()) throw UsageError("--points needs at least one value");
    const rmt::Rational v = rmt::correlation(spec, pts);
    if (o.format == "csv") {
        std::cout << "value\n" << value_text(v, o.asFloat) << "\n";
        return 0;
    }
    rmt::Json j;
    j["ensemble"] = rmt::ensemble_json(spec);
    j["points"] = rmt::coefficients_json(pts);
    j["value"] = rmt::scalar_json(v, o.asFloat);
    emit(j);
    return 0;
}

int run_secular(const Options& o) {
    const auto spec = make_spec(o);
    const rmt::Partition lambda = rmt::parse_partition(o.lambda);
    rmt::Rational v;
    if (lambda.length() <= 1) {
        v = rmt::secular_mean(spec, lambda[0]);
    } else if (spec.kind == rmt::Family::Jacobi) {
        v = rmt::secular_joint_expansion(spec, lambda);
    } else {
        v = rmt::secular_joint(spec, lambda);
    }
    if (o.format == "csv") {
        std::cout << "lambda,value\n" << rmt::csv_field(lambda.json()) << "," << value_text(v, o.asFloat) << "\n";
        return 0;
    }
    rmt::Json j;
    j["ensemble"] = rmt::ensemble_json(spec);
    j["lambda"] = rmt::Json::parse(lambda.json());
    j["value"] = rmt::scalar_json(v, o.asFloat);
    emit(j);
    return 0;
}

int run_expansion(const Options& o) {
    const auto spec = make_spec(o);
    rmt::Direction dir;
    if (o.direction == "psi") {
        dir = rmt::Direction::Psi;
    } else if (o.direction == "upsilon") {
        dir = rmt::Direction::Upsilon;
    } else {
        throw UsageError("direction must be psi or upsilon");
    }
    const int nVars = o.nVars.value_or(o.boxHeight);
    const auto table = rmt::expansion_table(spec, dir, nVars);
    if (o.format == "csv") {
        std::cout << table->csv(o.boxWidth, o.boxHeight);
        return 0;
    }
    rmt::Json j;
    j["ensemble"] = rmt::ensemble_json(spec);
    j["direction"] = rmt::direction_name(dir);
    j["n_vars"] = nVars;
    j["entries"] = rmt::Json::array();
    for (const auto& e : table->slice(o.boxWidth, o.boxHeight)) {
        rmt::Json x;
        x["lambda"] = rmt::Json::parse(e.lambda.json());
        x["nu"] = rmt::Json::parse(e.nu.json());
        x["value"] = rmt::scalar_json(e.value, o.asFloat);
        j["entries"].push_back(std::move(x));
    }
    emit(j);
    return 0;
}

int run_asymptotics(const Options& o) {
    const auto source = parse_source(o.source);
    const int order = o.nOrder.value_or(rmt::cd_series_stored_order(o.p));
    const auto even = rmt::cd_series(o.p, rmt::Parity::Even, order, source);
    const auto odd = rmt::cd_series(o.p, rmt::Parity::Odd, order, source);
    const auto avg = rmt::parity_average(even, odd);
    std::vector<std::pair<std::string, const rmt::AsymptoticSeries*>> shown;
    if (o.parity == "even" || o.parity == "avg") shown.emplace_back("even", &even);
    if (o.parity == "odd" || o.parity == "avg") shown.emplace_back("odd", &odd);
    if (o.parity == "avg") shown.emplace_back("avg", &avg);
    if (o.format == "csv") {
        std::cout << "parity,k,coefficient\n";
        for (const auto& [name, s] : shown) {
            for (int k = 0; k <= s->order(); ++k) {
                std::cout << name << "," << k << "," << value_text((*s)[static_cast<std::size_t>(k)], o.asFloat)
                          << "\n";
            }
        }
        return 0;
    }
    // Without an explicit --t-order, go as deep in t as the series order allows.
    int tOrder = o.tOrderSet ? o.tOrder : 0;
    if (!o.tOrderSet) {
        while (rmt::recovery_required_order(o.p, tOrder + 2) <= order) tOrder += 2;
    }
    rmt::Json j;
    j["p"] = o.p;
    j["source"] = rmt::series_source_name(source);
    j["series"] = rmt::Json::object();
    for (const auto& [name, s] : shown) j["series"][name] = rmt::series_json(*s, o.asFloat);
    j["recovery"] = rmt::recovery_json(rmt::semicircle_recovery(o.p, tOrder, order, source), o.asFloat);
    emit(j);
    return 0;
}

int run_semicircle(const Options& o) {
    const auto source = parse_source(o.source);
    const int nOrder = o.nOrder.value_or(rmt::cd_series_stored_order(o.p));
    const auto r = rmt::semicircle_recovery(o.p, o.tOrder, nOrder, source);
    if (o.format == "csv") {
        std::cout << "power,recovered,expected,matches\n";
        for (const auto& row : r.rows) {
            std::cout << row.power << "," << value_text(row.recovered, o.asFloat) << ","
                      << value_text(row.expected, o.asFloat) << "," << (row.matches ? "true" : "false") << "\n";
        }
        return 0;
    }
    emit(rmt::recovery_json(r, o.asFloat));
    return 0;
}

int run_mc(const Options& o) {
    const auto spec = make_spec(o);
    check_budget(o, o.samples);
    rmt::Functional f;
    std::optional<rmt::Rational> exact;
    if (o.functional == "moment") {
        const rmt::Rational t = rmt::Rational::parse(o.t.value_or("0"));
        f = rmt::MomentFunctional{o.p, {t.to_double()}};
        exact = rmt::moment(spec, o.p, t, rmt::MomentRoute::PartitionSum).value;
    } else if (o.functional == "secular") {
        const rmt::Partition lambda = rmt::parse_partition(o.lambda);
        f = rmt::SecularFunctional{lambda};
        if (lambda.length() <= 1) {
            exact = rmt::secular_mean(spec, lambda[0]);
        } else if (spec.kind != rmt::Family::Jacobi) {
            exact = rmt::secular_joint(spec, lambda);
        } else {
            exact = rmt::secular_joint_expansion(spec, lambda);
        }
    } else if (o.functional == "trace") {
        f = rmt::TraceFunctional{o.p};
    } else {
        throw UsageError("functional must be moment, secular or trace");
    }
    const auto e = rmt::estimate({spec, o.samples, o.seed, o.workers}, f);
    std::optional<double> z;
    if (exact && e.stderr_ > 0) z = (e.mean - exact->to_double()) / e.stderr_;
    if (o.format == "csv") {
        std::cout << "functional,ensemble,N,samples,seed,mean,stderr,exact,z_score\n";
        std::ostringstream row;
        row.precision(17);
        row << rmt::csv_field(e.functional) << "," << spec.name() << "," << spec.N << "," << e.samples << ","
            << o.seed << "," << e.mean << "," << e.stderr_ << "," << (exact ? exact->str() : "") << ",";
        if (z) row << *z;
        std::cout << row.str() << "\n";
        return 0;
    }
    rmt::Json j;
    j["functional"] = e.functional;
    j["ensemble"] = rmt::ensemble_json(spec);
    j["N"] = spec.N;
    j["samples"] = e.samples;
    j["seed"] = o.seed;
    j["workers"] = o.workers;
    j["mean"] = e.mean;
    j["stderr"] = e.stderr_;
    j["overflowed"] = e.overflowed;
    j["exact"] = exact ? rmt::scalar_json(*exact, o.asFloat) : rmt::Json(nullptr);
    j["z_score"] = z ? rmt::Json(*z) : rmt::Json(nullptr);
    emit(j);
    return 0;
}

int run_validate(const Options& o) {
    const auto budget = resolve_budget(o);
    const auto results = rmt::run_suite(o.suite, budget);
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    if (o.format == "csv") {
        std::cout << "name,passed,detail\n";
        for (const auto& r : results) {
            std::cout << rmt::csv_field(r.name) << "," << (r.passed ? "true" : "false") << ","
                      << rmt::csv_field(r.detail) << "\n";
        }
    } else {
        rmt::Json j;
        j["suite"] = o.suite;
        j["budget"] = rmt::budget_name(budget);
        j["passed"] = static_cast<int>(results.size()) - failed;
        j["failed"] = failed;
        j["checks"] = rmt::Json::array();
        for (const auto& r : results) j["checks"].push_back(rmt::check_json(r));
        emit(j);
    }
    return failed == 0 ? 0 : 1;
}

void add_ensemble(CLI::App* cmd, Options& o) {
    cmd->add_option("--ensemble", o.ensemble, "gue, lue or jue")->capture_default_str();
    cmd->add_option("-N", o.N, "matrix size")->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "LUE parameter (fraction)")->capture_default_str();
    cmd->add_option("--gamma1", o.gamma1, "JUE parameter at 0 (fraction)")->capture_default_str();
    cmd->add_option("--gamma2", o.gamma2, "JUE parameter at 1 (fraction)")->capture_default_str();
}

void add_output(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--float", o.asFloat, "print decimals instead of fractions");
    cmd->add_option("--budget", o.budget, "small or full (default from RMT_CHARPOLY_BUDGET, else small)")
        ->check(CLI::IsMember({"small", "full"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moments of characteristic polynomials of unitary ensembles"};
    app.require_subcommand(1);
    Options o;

    auto* moment = app.add_subcommand("moment", "E[det(t - M)^p]: coefficients in t, or the value at --t");
    add_ensemble(moment, o);
    moment->add_option("-p,--p", o.p, "power")->capture_default_str();
    moment->add_option("--t", o.t, "evaluation point (fraction)");
    moment->add_option("--route", o.route, "partition-sum, derivative-det, box-phi, closed-form-t0, second-moment-sums")
        ->capture_default_str();
    add_output(moment, o);

    auto* corr = app.add_subcommand("correlation", "E[prod_i det(t_i - M)] at the given points");
    add_ensemble(corr, o);
    corr->add_option("--points", o.points, "comma-separated fractions")->required();
    add_output(corr, o);

    auto* secular = app.add_subcommand("secular", "E[prod_j sc_{lambda_j}(M)]");
    add_ensemble(secular, o);
    secular->add_option("--lambda", o.lambda, "indices, e.g. 2,2")->required();
    add_output(secular, o);

    auto* expansion = app.add_subcommand("expansion", "Psi or Upsilon coefficients on a box");
    add_ensemble(expansion, o);
    expansion->add_option("--direction", o.direction, "psi or upsilon")->capture_default_str();
    expansion->add_option("--box-width", o.boxWidth, "largest part")->capture_default_str();
    expansion->add_option("--box-height", o.boxHeight, "largest length")->capture_default_str();
    expansion->add_option("--n-vars", o.nVars, "number of variables (default: box height)");
    add_output(expansion, o);

    auto* asym = app.add_subcommand("asymptotics", "1/N series of C D at the origin");
    asym->add_option("-p,--p", o.p, "half the moment power")->capture_default_str();
    asym->add_option("--parity", o.parity, "even, odd or avg")
        ->check(CLI::IsMember({"even", "odd", "avg"}))
        ->capture_default_str();
    asym->add_option("--n-order", o.nOrder, "number of 1/N terms (default: all stored)");
    asym->add_option("--t-order", o.tOrder, "t-order of the recovery report (default: deepest supported)");
    asym->add_option("--source", o.source, "stored or regenerated")->capture_default_str();
    add_output(asym, o);

    auto* semi = app.add_subcommand("semicircle", "parity-averaged t-expansion against the semicircle");
    semi->add_option("-p,--p", o.p, "half the moment power")->capture_default_str();
    semi->add_option("--t-order", o.tOrder, "highest even power of t")->capture_default_str();
    semi->add_option("--n-order", o.nOrder, "number of 1/N terms (default: all stored)");
    semi->add_option("--source", o.source, "stored or regenerated")->capture_default_str();
    add_output(semi, o);

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate with the exact value when known");
    add_ensemble(mc, o);
    mc->add_option("--functional", o.functional, "moment, secular or trace")->capture_default_str();
    mc->add_option("-p,--p", o.p, "moment power, or trace power")->capture_default_str();
    mc->add_option("--t", o.t, "evaluation point (fraction)");
    mc->add_option("--lambda", o.lambda, "secular indices");
    mc->add_option("--samples", o.samples, "number of matrices")->capture_default_str();
    mc->add_option("--seed", o.seed, "seed")->capture_default_str();
    mc->add_option("--workers", o.workers, "threads")->capture_default_str();
    add_output(mc, o);

    auto* validate = app.add_subcommand("validate", "run validation suites; exit 1 on any failure");
    std::string suites;
    for (const auto& s : rmt::suite_names()) suites += s + ", ";
    validate->add_option("--suite", o.suite, suites + "all")->capture_default_str();
    add_output(validate, o);

    try {
        app.parse(argc, argv);
        o.tOrderSet = asym->count("--t-order") > 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*moment) return run_moment(o);
        if (*corr) return run_correlation(o);
        if (*secular) return run_secular(o);
        if (*expansion) return run_expansion(o);
        if (*asym) return run_asymptotics(o);
        if (*semi) return run_semicircle(o);
        if (*mc) return run_mc(o);
        if (*validate) return run_validate(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rmt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
