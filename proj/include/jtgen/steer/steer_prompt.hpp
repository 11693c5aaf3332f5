#pragma once

#include <string>
#include <vector>

#include "jtgen/prompts/templates.hpp"
#include "jtgen/seed/refine.hpp"
#include "jtgen/seed/seed_prompt.hpp"
#include "jtgen/steer/intentions.hpp"

namespace jtgen::steer {

struct SteerPrompt {
    seed::SeedPrefix prefix;
    std::vector<BranchIntention> branch_intentions;
    FunctionIntention function_intention;
    std::string rendered;
};

// prefix + enumerated branch intentions + function intention + the
// assertion-completion instruction. Over budget, intentions are dropped
// last-first; the prefix is never trimmed. Throws seed::PromptOverflow
// when the prefix alone exceeds the budget.
SteerPrompt assemble_steer_prompt(const seed::SeedPrefix& prefix,
                                  const std::vector<BranchIntention>& intentions,
                                  const FunctionIntention& function_intention,
                                  const prompts::TemplateSet& templates,
                                  const seed::PromptBudget& budget);

// Two-stage fallback: no verified prefix; the exemplars are embedded
// directly as an invocation template next to the intentions.
std::string assemble_fallback_prompt(const code_model::MethodInfo& focal,
                                     const code_model::SourceClass& cls,
                                     const std::vector<seed::ExemplarSnippet>& exemplars,
                                     const std::vector<BranchIntention>& intentions,
                                     const FunctionIntention& function_intention,
                                     const prompts::TemplateSet& templates,
                                     const seed::PromptBudget& budget);

std::string render_function_intention(const FunctionIntention& f);

}  // namespace jtgen::steer
