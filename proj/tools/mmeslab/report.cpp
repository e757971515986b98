#include "mmeslab/report.hpp"

#include <cstdio>

namespace mmeslab::cli {

namespace {

std::string format_witness(double w) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", w);
    return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        nlohmann::ordered_json item;
        item["name"] = v.name;
        item["pass"] = v.pass;
        item["witness"] = v.witness;
        item["detail"] = v.detail;
        verdicts.push_back(std::move(item));
    }
    j["verdicts"] = std::move(verdicts);
    j["seed"] = report.seed;
    return j;
}

void print_report(const RunReport& report, std::ostream& out, bool as_json) {
    if (as_json) {
        out << report_to_json(report).dump(2) << "\n";
        return;
    }
    out << "command: " << report.command << "\n";
    out << "seed: " << report.seed << "\n";
    int failures = 0;
    for (const Verdict& v : report.verdicts) {
        if (!v.pass) ++failures;
        out << (v.pass ? "[ OK ] " : "[FAIL] ") << v.name
            << "  witness=" << format_witness(v.witness);
        if (!v.detail.empty()) out << "  (" << v.detail << ")";
        out << "\n";
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << " (" << report.verdicts.size() << " total)\n";
}

}  // namespace mmeslab::cli
