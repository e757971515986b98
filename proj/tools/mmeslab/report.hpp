#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmeslab::cli {

// One named check with a numeric witness, so failures are diagnosable from
// the report alone.
struct Verdict {
    std::string name;
    bool pass = false;
    double witness = 0.0;
    std::string detail;
};

struct RunReport {
    std::string command;
    nlohmann::ordered_json parameters;
    std::vector<Verdict> verdicts;
    std::uint64_t seed = 0;

    bool all_pass() const {
        for (const Verdict& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

nlohmann::ordered_json report_to_json(const RunReport& report);

// Stable plain-text rendering: one line per verdict plus a summary.
void print_report(const RunReport& report, std::ostream& out, bool as_json);

}  // namespace mmeslab::cli
