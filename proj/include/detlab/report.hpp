#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "detlab/modp.hpp"

namespace detlab {

enum class Status { Pass, Fail, Budget, Undetermined };

std::string to_string(Status s);

struct CheckRecord {
    std::string tag;
    std::string anchor;
    Status status = Status::Undetermined;
    Certification certification = Certification::Exact;
    std::vector<std::string> witnesses;  // FAIL records always carry one
    nlohmann::json values = nlohmann::json::object();
    double millis = 0;
    std::string note;
};

struct Report {
    static constexpr const char* schema = "detlab.report/1";
    nlohmann::json config = nlohmann::json::object();
    std::vector<CheckRecord> checks;
    std::vector<std::string> warnings;
};

enum class Format { Json, Table };

// Serialized report.  With include_timings=false the output is a pure function of
// config and seed.
std::string emit(const Report& report, Format format, bool include_timings = true);

// Hex digest of the timing-free JSON form.
std::string determinism_digest(const Report& report);

// Exit-code contract: 0 all PASS, 1 any FAIL, 3 only BUDGET/UNDETERMINED deviations.
int exit_code(const Report& report);

// 64-bit FNV-1a as 16 hex digits.
std::string short_hash(const std::string& s);

constexpr std::size_t kWitnessLimit = 500;
std::string truncate_witness(const std::string& w);

}  // namespace detlab
