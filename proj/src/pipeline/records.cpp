#include "jtgen/pipeline/records.hpp"

#include <json.hpp>

#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::pipeline {

using nlohmann::json;

std::string outcome_to_json_line(const Outcome& o) {
    json j{{"focal_signature", o.focal_signature},
           {"project", o.project},
           {"compiled", o.compiled},
           {"tests_passed", o.tests_passed},
           {"partial_valid", o.partial_valid},
           {"failure_class", to_string(o.failure_class)},
           {"seed_repair_calls", o.seed_repair_calls},
           {"test_repair_calls", o.test_repair_calls},
           {"iterations_used", o.iterations_used},
           {"gateway_calls", o.gateway_calls},
           {"used_fallback", o.used_fallback},
           {"stage_log", o.stage_log},
           {"test_class_name", o.test_class_name},
           {"test_file", o.test_file}};
    if (o.coverage) {
        j["coverage"] = {{"branches_covered", o.coverage->branches_covered},
                         {"branches_total", o.coverage->branches_total},
                         {"lines_covered", o.coverage->lines_covered},
                         {"lines_total", o.coverage->lines_total}};
    }
    return j.dump();
}

Outcome outcome_from_json_line(const std::string& line) {
    json j = json::parse(line);
    Outcome o;
    o.focal_signature = j.at("focal_signature").get<std::string>();
    o.project = j.value("project", "");
    o.compiled = j.value("compiled", false);
    o.tests_passed = j.value("tests_passed", false);
    o.partial_valid = j.value("partial_valid", false);
    o.failure_class = failure_class_from_string(j.value("failure_class", "none"));
    o.seed_repair_calls = j.value("seed_repair_calls", 0);
    o.test_repair_calls = j.value("test_repair_calls", 0);
    o.iterations_used = j.value("iterations_used", 0);
    o.gateway_calls = j.value("gateway_calls", 0);
    o.used_fallback = j.value("used_fallback", false);
    if (j.contains("stage_log")) o.stage_log = j["stage_log"].get<std::vector<std::string>>();
    o.test_class_name = j.value("test_class_name", "");
    o.test_file = j.value("test_file", "");
    if (j.contains("coverage")) {
        toolchain::MethodCoverage c;
        c.branches_covered = j["coverage"].value("branches_covered", 0);
        c.branches_total = j["coverage"].value("branches_total", 0);
        c.lines_covered = j["coverage"].value("lines_covered", 0);
        c.lines_total = j["coverage"].value("lines_total", 0);
        o.coverage = c;
    }
    return o;
}

void append_record(const std::filesystem::path& records_file, const Outcome& outcome) {
    fs::append_line(records_file, outcome_to_json_line(outcome));
}

LoadedRecords load_records(const std::filesystem::path& records_file) {
    LoadedRecords out;
    std::string text = fs::read_file(records_file);
    for (const auto& line : strings::split_lines(text)) {
        if (strings::trim(line).empty()) continue;
        try {
            out.outcomes.push_back(outcome_from_json_line(line));
        } catch (const json::exception&) {
            ++out.skipped;
        }
    }
    return out;
}

}  // namespace jtgen::pipeline
