#include "detlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace detlab {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Budget: return "BUDGET";
        case Status::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

std::string short_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string truncate_witness(const std::string& w) {
    if (w.size() <= kWitnessLimit) return w;
    return w.substr(0, kWitnessLimit) + "... [" + std::to_string(w.size()) + " chars, fnv1a " +
           short_hash(w) + "]";
}

namespace {

nlohmann::json to_json(const Report& report, bool include_timings) {
    nlohmann::json j;
    j["schema"] = Report::schema;
    j["config"] = report.config;
    auto checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json r;
        r["tag"] = c.tag;
        r["anchor"] = c.anchor;
        r["status"] = to_string(c.status);
        r["certification"] = to_string(c.certification);
        r["witnesses"] = c.witnesses;
        r["values"] = c.values;
        if (!c.note.empty()) r["note"] = c.note;
        if (include_timings) r["millis"] = c.millis;
        checks.push_back(std::move(r));
    }
    j["checks"] = checks;
    j["warnings"] = report.warnings;
    nlohmann::json summary;
    for (Status s : {Status::Pass, Status::Fail, Status::Budget, Status::Undetermined})
        summary[to_string(s)] = std::count_if(report.checks.begin(), report.checks.end(),
                                              [s](const CheckRecord& c) { return c.status == s; });
    j["summary"] = summary;
    return j;
}

std::string pad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string emit(const Report& report, Format format, bool include_timings) {
    if (format == Format::Json) return to_json(report, include_timings).dump(2) + "\n";

    std::size_t wt = 3, wa = 6;
    for (const auto& c : report.checks) {
        wt = std::max(wt, c.tag.size());
        wa = std::max(wa, c.anchor.size());
    }
    std::ostringstream out;
    out << pad("tag", wt) << "  " << pad("anchor", wa) << "  " << pad("status", 12) << "  "
        << pad("cert", 13);
    if (include_timings) out << "  " << pad("ms", 10);
    out << "\n";
    for (const auto& c : report.checks) {
        out << pad(c.tag, wt) << "  " << pad(c.anchor, wa) << "  " << pad(to_string(c.status), 12)
            << "  " << pad(to_string(c.certification), 13);
        if (include_timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", c.millis);
            out << "  " << pad(buf, 10);
        }
        out << "\n";
        if (!c.values.empty()) out << "    values: " << truncate_witness(c.values.dump()) << "\n";
        for (const auto& w : c.witnesses) out << "    witness: " << truncate_witness(w) << "\n";
        if (!c.note.empty()) out << "    note: " << c.note << "\n";
    }
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    return out.str();
}

std::string determinism_digest(const Report& report) {
    return short_hash(to_json(report, false).dump());
}

int exit_code(const Report& report) {
    bool deviation = false;
    for (const auto& c : report.checks) {
        if (c.status == Status::Fail) return 1;
        if (c.status != Status::Pass) deviation = true;
    }
    return deviation ? 3 : 0;
}

}  // namespace detlab
