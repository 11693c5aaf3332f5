#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/seed/exemplars.hpp"
#include "jtgen/support/errors.hpp"

namespace jtgen::seed {

class PromptOverflow : public Error {
public:
    explicit PromptOverflow(const std::string& what) : Error(what) {}
};

struct PromptBudget {
    std::size_t max_tokens = 12000;  // prompt side of a 16K context
};

// constructor and field context shown to the model
std::string class_context(const code_model::SourceClass& cls);

std::string seed_test_class_name(const code_model::SourceClass& cls,
                                 const code_model::MethodInfo& focal);
std::string final_test_class_name(const code_model::SourceClass& cls,
                                  const code_model::MethodInfo& focal);

// Renders the seed prompt: focal signature + body, class context, labeled
// exemplars, and the no-assertions instruction. Trailing exemplars are
// dropped first when the budget is exceeded, then the class context; the
// focal body itself is never trimmed. Throws PromptOverflow when the focal
// method alone exceeds the budget.
std::string build_seed_prompt(const code_model::MethodInfo& focal,
                              const code_model::SourceClass& cls,
                              const std::vector<ExemplarSnippet>& exemplars,
                              const prompts::TemplateSet& templates,
                              const PromptBudget& budget);

std::string build_seed_repair_prompt(const std::string& test_code,
                                     const std::string& diagnostics_text,
                                     const std::string& focal_signature,
                                     const prompts::TemplateSet& templates);

}  // namespace jtgen::seed
