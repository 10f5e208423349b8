#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "detlab/budget.hpp"
#include "detlab/matrix.hpp"
#include "detlab/report.hpp"

namespace detlab {

struct ScenarioConfig {
    Family family = Family::Cloned;
    int m = 3;
    int r = 0;
    std::vector<std::string> checks{"all"};
    Budget budget;
    std::optional<long long> budget_ms;  // per-check wall time
    std::uint64_t seed = 42;
    std::vector<std::uint64_t> primes;

    // ConfigError on unknown families, r out of range, unknown or inapplicable tags.
    void validate() const;
    nlohmann::json to_json() const;
    static ScenarioConfig from_json(const nlohmann::json& j);
    // Reads DETLAB_BUDGET_MS when no explicit per-check limit was given.
    void apply_environment();
};

struct CheckInfo {
    std::string tag;
    std::string anchor;
    std::set<Family> families;
    // Largest m included when the check list is "all".
    int desk_max_m;
};

// Fixed registry, in execution order (matrix, gradient, syzygies, Hessian, Groebner).
const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(const std::string& tag);

// The concrete check list: "all" expands to the applicable desk-scale checks.
std::vector<std::string> expand_checks(const ScenarioConfig& cfg);

Report run(const ScenarioConfig& cfg);

// Zeros family only.  Statuses: PASS = not refuted at this size, FAIL = refuted
// with a witness, UNDETERMINED = probe inconclusive, BUDGET = cut off.
Report conjecture_harness(const ScenarioConfig& cfg);

}  // namespace detlab
