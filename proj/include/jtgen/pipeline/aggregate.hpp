#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jtgen/pipeline/session.hpp"

namespace jtgen::pipeline {

// Complexity lookups for binned breakdowns, keyed by focal signature.
struct ComplexityKey {
    std::optional<int> init_bin;  // 0..9
    std::optional<int> ccn;
};
using ComplexityIndex = std::map<std::string, ComplexityKey>;

struct RateCell {
    int total = 0;
    int compiled = 0;
    int passed = 0;
    int partial = 0;
    double branch_pct_sum = 0.0;  // per-session percentages, summed
    int branch_n = 0;
    double line_pct_sum = 0.0;
    int line_n = 0;

    void add(const Outcome& o);
    double compile_rate() const { return total ? double(compiled) / total : 0.0; }
    double pass_rate() const { return total ? double(passed) / total : 0.0; }
    double pass_rate_of_compiled() const { return compiled ? double(passed) / compiled : 0.0; }
    double mean_branch() const { return branch_n ? branch_pct_sum / branch_n : 0.0; }
    double mean_line() const { return line_n ? line_pct_sum / line_n : 0.0; }
};

struct AggregateReport {
    std::string run_label;  // typically the model id
    RateCell overall;
    std::map<std::string, RateCell> by_project;
    std::map<int, RateCell> by_init_bin;            // -1 collects unscored methods
    std::map<std::string, RateCell> by_ccn_group;   // "1-2", "3-4", ... "15+"
    int records_skipped = 0;
};

std::string ccn_group_of(int ccn);

AggregateReport aggregate(const std::vector<Outcome>& outcomes,
                          const ComplexityIndex& complexity,
                          const std::string& run_label = "run");

std::string report_to_json(const AggregateReport& report);
std::string report_to_markdown(const AggregateReport& report);
std::string report_to_csv(const AggregateReport& report);

}  // namespace jtgen::pipeline
