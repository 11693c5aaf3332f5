#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/gateway/gateway.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/seed/exemplars.hpp"
#include "jtgen/toolchain/fixes.hpp"
#include "jtgen/toolchain/toolchain.hpp"

namespace jtgen::pipeline {

struct SessionConfig {
    int delta = 5;            // repair budget per fix loop
    int max_seed_rounds = 5;  // seed repair budget per session
    int max_iterations = 5;   // fresh generate attempts per session
    bool fallback_enabled = true;
    int worker_cap = 1;
};

enum class FailureClass { None, CompileExhausted, RuntimeExhausted, GatewayError, ToolchainError };

std::string to_string(FailureClass fc);
FailureClass failure_class_from_string(const std::string& s);

struct Outcome {
    std::string focal_signature;
    std::string project;
    bool compiled = false;
    bool tests_passed = false;
    bool partial_valid = false;
    std::optional<toolchain::MethodCoverage> coverage;
    FailureClass failure_class = FailureClass::None;

    int seed_repair_calls = 0;
    int test_repair_calls = 0;
    int iterations_used = 0;
    int gateway_calls = 0;
    bool used_fallback = false;
    std::vector<std::string> stage_log;  // monotone except the fallback restart
    std::string test_class_name;
    std::string test_file;  // artifact path relative to the output root
};

struct Services {
    gateway::Gateway* gateway = nullptr;
    toolchain::Toolchain* toolchain = nullptr;
    const prompts::TemplateSet* templates = nullptr;
    const std::vector<code_model::SourceClass>* corpus = nullptr;
    const std::vector<seed::EvoSuiteTestClass>* evosuite_tests = nullptr;  // optional

    std::filesystem::path workspace_root;
    std::filesystem::path output_root;
    std::string project_classpath;
    std::map<std::string, std::string> known_imports;
    std::string model_id = "default-model";
    int max_completion_tokens = 2048;
    std::size_t prompt_token_budget = 12000;
    std::string project_name = "project";
};

// Seed -> Steer -> iterative Generate&Repair for one focal method, with the
// two-stage fallback after the three-stage pipeline's final bottom. Budgets
// are session-global; the fallback consumes whatever remains. Never throws
// past the session boundary.
Outcome run_focal(const code_model::MethodInfo& focal, const code_model::SourceClass& cls,
                  const SessionConfig& cfg, Services& services, int ordinal = 0);

// ---- Fix(T, E, delta) -------------------------------------------------------

using FixErrors = std::variant<toolchain::CompileResult, toolchain::TestRunResult>;

enum class FixStatus { Fixed, Partial, Bottom };

struct FixResult {
    FixStatus status = FixStatus::Bottom;
    std::string code;          // T* for Fixed, last compilable candidate for Partial
    int repair_calls_used = 0;
    toolchain::TestRunResult last_run;  // populated for Partial
};

struct FixDeps {
    gateway::Gateway* gateway = nullptr;
    toolchain::Toolchain* toolchain = nullptr;
    const prompts::TemplateSet* templates = nullptr;
    toolchain::FixContext fix_context;
    std::filesystem::path workspace;
    std::string classpath;
    std::string model_id;
    int max_completion_tokens = 2048;
    std::string focal_signature;
    std::string test_class_name;
};

// Repair loop: at most `delta` gateway calls, each followed by lightweight
// fixes and a recompile/rerun. Returns the first fully passing candidate,
// else the last compilable-but-failing one (partial), else bottom.
FixResult fix(const std::string& test_code, const FixErrors& errors, int delta, FixDeps& deps);

}  // namespace jtgen::pipeline
