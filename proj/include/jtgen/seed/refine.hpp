#pragma once

#include <filesystem>
#include <string>

#include "jtgen/code_model/model.hpp"
#include "jtgen/gateway/gateway.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/toolchain/fixes.hpp"
#include "jtgen/toolchain/toolchain.hpp"

namespace jtgen::seed {

enum class CompileStatus { Unverified, Passed, Failed };

std::string to_string(CompileStatus status);

// An assertion-free, marker-carrying test class that invokes the focal
// method. `code` compiles when compile_status == Passed.
struct SeedPrefix {
    std::string code;
    std::string focal_signature;
    int todo_marker_count = 0;
    CompileStatus compile_status = CompileStatus::Unverified;
    int repair_rounds_used = 0;
};

struct RefineDeps {
    gateway::Gateway* gateway = nullptr;
    toolchain::Toolchain* toolchain = nullptr;
    const prompts::TemplateSet* templates = nullptr;
    toolchain::FixContext fix_context;
    std::filesystem::path workspace;
    std::string classpath;
    std::string model_id;
    int max_completion_tokens = 2048;
    int max_rounds = 5;
};

// Compilation-feedback loop over a gateway-produced prefix candidate:
// lightweight fixes + assertion strip, compile, and on failure a repair
// prompt embedding the diagnostics. At most `max_rounds` repair calls.
// A candidate that stopped invoking the focal method is treated as a
// compile failure so the loop can recover it.
SeedPrefix refine_seed(const std::string& prefix_candidate,
                       const code_model::MethodInfo& focal,
                       const code_model::SourceClass& cls, RefineDeps& deps);

// Strips assertions and guarantees at least one marker, inserted after the
// last focal invocation when the model emitted none.
struct PreparedPrefix {
    std::string code;
    int marker_count = 0;
    bool invokes_focal = false;
};
PreparedPrefix prepare_prefix_candidate(const std::string& candidate,
                                        const code_model::MethodInfo& focal);

}  // namespace jtgen::seed
