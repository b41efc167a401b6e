#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rmt/asymptotics.hpp"
#include "rmt/ensemble.hpp"
#include "rmt/montecarlo.hpp"
#include "rmt/polynomial.hpp"
#include "rmt/rational.hpp"
#include "rmt/validation.hpp"

namespace rmt {

using Json = nlohmann::ordered_json;

/// Exact values travel as "num/den" strings ("3" for integers) unless
/// `asFloat` is set, in which case a double is written.
Json scalar_json(const Rational& r, bool asFloat = false);
/// Inverse of scalar_json for the exact form. DomainError otherwise.
Rational scalar_from_json(const Json& j);

/// Coefficients in increasing degree.
Json coefficients_json(const Polynomial& p, bool asFloat = false);
Json coefficients_json(const std::vector<Rational>& c, bool asFloat = false);

/// {"kind": "GUE", "N": 4, "gamma": "1/2", ...}; only the parameters of
/// the family appear.
Json ensemble_json(const EnsembleSpec& spec);

Json series_json(const AsymptoticSeries& s, bool asFloat = false);
Json recovery_json(const RecoveryReport& r, bool asFloat = false);
Json check_json(const CheckResult& c);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace rmt
