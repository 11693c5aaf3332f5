#include "jtgen/pipeline/aggregate.hpp"

#include <json.hpp>

#include <cstdio>

namespace jtgen::pipeline {

using nlohmann::json;

void RateCell::add(const Outcome& o) {
    ++total;
    if (o.compiled) ++compiled;
    if (o.tests_passed) ++passed;
    if (o.partial_valid) ++partial;
    if (o.coverage) {
        if (o.coverage->branches_total > 0) {
            branch_pct_sum += 100.0 * o.coverage->branches_covered / o.coverage->branches_total;
            ++branch_n;
        }
        if (o.coverage->lines_total > 0) {
            line_pct_sum += 100.0 * o.coverage->lines_covered / o.coverage->lines_total;
            ++line_n;
        }
    }
}

std::string ccn_group_of(int ccn) {
    if (ccn <= 2) return "1-2";
    if (ccn <= 4) return "3-4";
    if (ccn <= 6) return "5-6";
    if (ccn <= 8) return "7-8";
    if (ccn <= 10) return "9-10";
    if (ccn <= 14) return "11-14";
    return "15+";
}

AggregateReport aggregate(const std::vector<Outcome>& outcomes,
                          const ComplexityIndex& complexity, const std::string& run_label) {
    AggregateReport report;
    report.run_label = run_label;
    for (const auto& o : outcomes) {
        report.overall.add(o);
        report.by_project[o.project.empty() ? "project" : o.project].add(o);

        auto it = complexity.find(o.focal_signature);
        int bin = -1;
        std::optional<int> ccn;
        if (it != complexity.end()) {
            if (it->second.init_bin) bin = *it->second.init_bin;
            ccn = it->second.ccn;
        }
        report.by_init_bin[bin].add(o);
        if (ccn) report.by_ccn_group[ccn_group_of(*ccn)].add(o);
    }
    return report;
}

namespace {

std::string pct(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", value * 100.0);
    return buf;
}

std::string pct_raw(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", value);
    return buf;
}

json cell_to_json(const RateCell& c) {
    return json{{"focal_methods", c.total},
                {"compiled", c.compiled},
                {"passed", c.passed},
                {"partial_valid", c.partial},
                {"compile_pass_rate", c.compile_rate()},
                {"test_pass_rate", c.pass_rate()},
                {"test_pass_rate_of_compiled", c.pass_rate_of_compiled()},
                {"mean_branch_coverage_pct", c.mean_branch()},
                {"mean_line_coverage_pct", c.mean_line()}};
}

}  // namespace

std::string report_to_json(const AggregateReport& report) {
    json j;
    j["run_label"] = report.run_label;
    j["overall"] = cell_to_json(report.overall);
    j["records_skipped"] = report.records_skipped;
    json projects = json::object();
    for (const auto& [name, cell] : report.by_project) projects[name] = cell_to_json(cell);
    j["by_project"] = projects;
    json bins = json::object();
    for (const auto& [bin, cell] : report.by_init_bin) {
        std::string label = bin < 0 ? "unscored" : std::to_string(bin) + "-" +
                                                       std::to_string(bin + 1);
        bins[label] = cell_to_json(cell);
    }
    j["by_init_complexity_bin"] = bins;
    json groups = json::object();
    for (const auto& [g, cell] : report.by_ccn_group) groups[g] = cell_to_json(cell);
    j["by_ccn_group"] = groups;
    return j.dump(2) + "\n";
}

std::string report_to_markdown(const AggregateReport& report) {
    std::string out;
    out += "| Method | Projects | Focal methods | Compile passed Rate | Test Passed Rate | "
           "Branch Coverage | Line Coverage |\n";
    out += "|---|---|---|---|---|---|---|\n";
    auto row = [&](const std::string& project, const RateCell& c) {
        out += "| " + report.run_label + " | " + project + " | " + std::to_string(c.total) +
               " | " + pct(c.compile_rate()) + " | " + pct(c.pass_rate()) + " | " +
               pct_raw(c.mean_branch()) + " | " + pct_raw(c.mean_line()) + " |\n";
    };
    row("Total", report.overall);
    for (const auto& [name, cell] : report.by_project) row(name, cell);

    out += "\nCompile pass rate by initialization-complexity bin:\n\n";
    out += "| Bin | Focal methods | Compile passed Rate | Test Passed Rate |\n";
    out += "|---|---|---|---|\n";
    for (const auto& [bin, cell] : report.by_init_bin) {
        std::string label =
            bin < 0 ? "unscored" : std::to_string(bin) + "-" + std::to_string(bin + 1);
        out += "| " + label + " | " + std::to_string(cell.total) + " | " +
               pct(cell.compile_rate()) + " | " + pct(cell.pass_rate()) + " |\n";
    }

    out += "\nCoverage by cyclomatic-complexity group:\n\n";
    out += "| CCN | Focal methods | Branch Coverage | Line Coverage |\n";
    out += "|---|---|---|---|\n";
    for (const auto& [g, cell] : report.by_ccn_group) {
        out += "| " + g + " | " + std::to_string(cell.total) + " | " + pct_raw(cell.mean_branch()) +
               " | " + pct_raw(cell.mean_line()) + " |\n";
    }

    if (report.records_skipped > 0) {
        out += "\n(skipped " + std::to_string(report.records_skipped) +
               " malformed record(s))\n";
    }
    return out;
}

std::string report_to_csv(const AggregateReport& report) {
    std::string out =
        "scope,label,focal_methods,compile_pass_rate,test_pass_rate,branch_coverage_pct,"
        "line_coverage_pct\n";
    auto row = [&](const std::string& scope, const std::string& label, const RateCell& c) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%s,%d,%.4f,%.4f,%.2f,%.2f\n", scope.c_str(),
                      label.c_str(), c.total, c.compile_rate(), c.pass_rate(), c.mean_branch(),
                      c.mean_line());
        out += buf;
    };
    row("overall", "total", report.overall);
    for (const auto& [name, cell] : report.by_project) row("project", name, cell);
    for (const auto& [bin, cell] : report.by_init_bin) {
        row("init_bin", bin < 0 ? "unscored" : std::to_string(bin), cell);
    }
    for (const auto& [g, cell] : report.by_ccn_group) row("ccn_group", g, cell);
    return out;
}

}  // namespace jtgen::pipeline
