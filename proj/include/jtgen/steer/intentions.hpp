#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/gateway/gateway.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/steer/branch_points.hpp"

namespace jtgen::steer {

struct BranchIntention {
    BranchPoint branch;
    std::string description;
};

struct FunctionIntention {
    std::string purpose;
    std::string io_behavior;
    std::string side_effects;
    std::string corner_cases;
};

struct IntentionDeps {
    gateway::Gateway* gateway = nullptr;
    const prompts::TemplateSet* templates = nullptr;
    std::string model_id;
    int max_completion_tokens = 1024;
};

// One batched gateway call per focal method; points the response leaves
// undescribed get the mechanical fallback ("taken when <condition> holds").
// A malformed response falls back for every point. No points, no call.
std::vector<BranchIntention> infer_branch_intentions(const std::vector<BranchPoint>& points,
                                                     const code_model::MethodInfo& focal,
                                                     IntentionDeps& deps);

// Single call; missing fields stay empty except purpose, which falls back
// to the focal signature restated.
FunctionIntention summarize_function_intention(const code_model::MethodInfo& focal,
                                               const code_model::SourceClass& cls,
                                               IntentionDeps& deps);

std::string mechanical_fallback_description(const BranchPoint& point);

}  // namespace jtgen::steer
