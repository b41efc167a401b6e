#pragma once

#include <string>
#include <vector>

namespace rmt {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Small keeps every suite to seconds; Full runs the acceptance parameters.
enum class Budget { Small, Full };

Budget parse_budget(const std::string& text);
std::string budget_name(Budget b);
/// RMT_CHARPOLY_BUDGET if set, otherwise the fallback.
Budget budget_from_env(Budget fallback);

inline constexpr int kCriterionCount = 10;

/// Short title of acceptance criterion k (1-based).
std::string criterion_title(int k);
/// Runs criterion k. Exceptions inside a check become a failed result.
CheckResult run_criterion(int k, Budget budget);

/// exact-arith, combinatorics, ortho-poly, expansions, moments,
/// asymptotics, secular, montecarlo, criteria.
std::vector<std::string> suite_names();
/// Runs one named suite, or every suite for "all". DomainError for an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& name, Budget budget);

}  // namespace rmt
