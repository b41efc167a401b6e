#include "rmt/serialize.hpp"

#include "rmt/errors.hpp"

namespace rmt {

Json scalar_json(const Rational& r, bool asFloat) {
    if (asFloat) return r.to_double();
    return r.str();
}

Rational scalar_from_json(const Json& j) {
    if (!j.is_string()) throw DomainError("exact values are stored as fraction strings");
    return Rational::parse(j.get<std::string>());
}

Json coefficients_json(const std::vector<Rational>& c, bool asFloat) {
    Json out = Json::array();
    for (const auto& x : c) out.push_back(scalar_json(x, asFloat));
    return out;
}

Json coefficients_json(const Polynomial& p, bool asFloat) {
    std::vector<Rational> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coefficient(static_cast<std::size_t>(k)));
    return coefficients_json(c, asFloat);
}

Json ensemble_json(const EnsembleSpec& spec) {
    Json j;
    j["kind"] = spec.name();
    j["N"] = spec.N;
    if (spec.kind == Family::Laguerre) j["gamma"] = spec.gamma.str();
    if (spec.kind == Family::Jacobi) {
        j["gamma1"] = spec.gamma1.str();
        j["gamma2"] = spec.gamma2.str();
    }
    return j;
}

Json series_json(const AsymptoticSeries& s, bool asFloat) {
    Json j;
    j["leading"] = s.leading;
    j["variable"] = s.variable;
    j["parity"] = series_parity_name(s.parity);
    j["order"] = s.order();
    j["coefficients"] = coefficients_json(s.coefficients, asFloat);
    return j;
}

namespace {

Json laurent_json(const LaurentSeries& l, bool asFloat) {
    Json j;
    j["top"] = l.top;
    j["bottom"] = l.bottom;
    j["coefficients"] = coefficients_json(l.coefficients, asFloat);
    return j;
}

}  // namespace

Json recovery_json(const RecoveryReport& r, bool asFloat) {
    Json j;
    j["p"] = r.p;
    j["t_order"] = r.t_order;
    j["n_order"] = r.n_order;
    j["required_order"] = r.required_order;
    j["source"] = series_source_name(r.source);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["power"] = row.power;
        x["recovered"] = scalar_json(row.recovered, asFloat);
        x["expected"] = scalar_json(row.expected, asFloat);
        x["positive_powers_vanish"] = row.positive_powers_vanish;
        x["matches"] = row.matches;
        x["normalized"] = laurent_json(row.normalized, asFloat);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["coefficients"] = Json::array();
    for (const auto& row : r.rows) j["coefficients"].push_back(scalar_json(row.recovered, asFloat));
    j["ok"] = r.ok();
    return j;
}

Json check_json(const CheckResult& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace rmt
