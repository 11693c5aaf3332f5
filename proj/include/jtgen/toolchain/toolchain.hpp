#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jtgen/support/errors.hpp"

namespace jtgen::toolchain {

enum class DiagnosticKind { Error, Warning };

struct Diagnostic {
    std::string file;
    int line = 0;
    std::string message;
    DiagnosticKind kind = DiagnosticKind::Error;
};

struct CompileResult {
    bool success = false;
    std::vector<Diagnostic> diagnostics;

    int error_count() const {
        int n = 0;
        for (const auto& d : diagnostics)
            if (d.kind == DiagnosticKind::Error) ++n;
        return n;
    }
};

enum class TestOutcome { Passed, AssertionFailure, RuntimeException };

std::string to_string(TestOutcome outcome);

struct TestFailure {
    std::string test_name;
    std::string exception_type;
    std::string message;
    std::string first_frame;
};

struct TestRunResult {
    std::map<std::string, TestOutcome> outcomes;  // per test method
    std::vector<TestFailure> failures;

    bool all_passed() const {
        if (outcomes.empty()) return false;
        for (const auto& [name, o] : outcomes)
            if (o != TestOutcome::Passed) return false;
        return true;
    }
    bool any_assertion_failure() const {
        for (const auto& [name, o] : outcomes)
            if (o == TestOutcome::AssertionFailure) return true;
        return false;
    }
};

struct MethodCoverage {
    int branches_covered = 0;
    int branches_total = 0;
    int lines_covered = 0;
    int lines_total = 0;
};

struct CoverageReport {
    std::map<std::string, MethodCoverage> by_signature;  // canonical signatures
    std::vector<std::string> unmatched_focals;           // zeroed, with a diagnostic

    std::optional<MethodCoverage> find(const std::string& signature) const {
        auto it = by_signature.find(signature);
        if (it == by_signature.end()) return std::nullopt;
        return it->second;
    }
};

class ToolchainMissing : public Error {
public:
    using Error::Error;
};
class CompileTimeout : public Error {
public:
    using Error::Error;
};
class RunnerCrash : public Error {
public:
    using Error::Error;
};
class RunTimeout : public Error {
public:
    using Error::Error;
};
class AgentMissing : public Error {
public:
    using Error::Error;
};
class MalformedReport : public Error {
public:
    using Error::Error;
};

// Compile / run / coverage adapter. A workspace directory is owned by one
// session; within it the three steps run strictly in sequence. The project
// under test is never mutated.
class Toolchain {
public:
    virtual ~Toolchain() = default;

    virtual CompileResult compile(const std::filesystem::path& test_file,
                                  const std::string& classpath,
                                  const std::filesystem::path& workspace) = 0;

    virtual TestRunResult run_tests(const std::string& test_class_name,
                                    const std::string& classpath,
                                    const std::filesystem::path& workspace) = 0;

    virtual CoverageReport measure_coverage(const std::string& test_class_name,
                                            const std::string& classpath,
                                            const std::vector<std::string>& focal_signatures,
                                            const std::filesystem::path& workspace) = 0;
};

// Formats diagnostics for a repair prompt: at most `max_records` error
// records and `max_chars` characters, file/line headers preserved.
std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::size_t max_records = 5, std::size_t max_chars = 2000);

std::string format_failures(const std::vector<TestFailure>& failures,
                            std::size_t max_records = 5, std::size_t max_chars = 2000);

}  // namespace jtgen::toolchain
