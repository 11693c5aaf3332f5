#include "jtgen/steer/steer_prompt.hpp"

#include "jtgen/support/strings.hpp"

namespace jtgen::steer {

std::string render_function_intention(const FunctionIntention& f) {
    std::string out = "purpose: " + f.purpose + "\n";
    if (!f.io_behavior.empty()) out += "io: " + f.io_behavior + "\n";
    if (!f.side_effects.empty()) out += "side_effects: " + f.side_effects + "\n";
    if (!f.corner_cases.empty()) out += "corner_cases: " + f.corner_cases + "\n";
    return out;
}

namespace {

std::string intentions_section(const std::vector<BranchIntention>& intentions) {
    if (intentions.empty()) return "";
    std::string out = "Branch intentions:\n";
    for (std::size_t i = 0; i < intentions.size(); ++i) {
        const auto& intent = intentions[i];
        out += std::to_string(i + 1) + ". " + intent.description;
        if (!intent.branch.condition_text.empty()) {
            out += " [" + to_string(intent.branch.kind) + ": " +
                   intent.branch.condition_text + "]";
        }
        out += '\n';
    }
    out += '\n';
    return out;
}

}  // namespace

SteerPrompt assemble_steer_prompt(const seed::SeedPrefix& prefix,
                                  const std::vector<BranchIntention>& intentions,
                                  const FunctionIntention& function_intention,
                                  const prompts::TemplateSet& templates,
                                  const seed::PromptBudget& budget) {
    SteerPrompt out;
    out.prefix = prefix;
    out.branch_intentions = intentions;
    out.function_intention = function_intention;

    const std::string& tmpl = templates.get("steer");
    std::vector<BranchIntention> kept = intentions;
    for (;;) {
        std::string rendered = prompts::render(
            tmpl, {{"prefix", prefix.code},
                   {"branch_intentions", intentions_section(kept)},
                   {"function_intention", render_function_intention(function_intention)}});
        if (strings::approx_tokens(rendered) <= budget.max_tokens) {
            out.branch_intentions = kept;
            out.rendered = std::move(rendered);
            return out;
        }
        if (kept.empty()) {
            throw seed::PromptOverflow("seed prefix for " + prefix.focal_signature +
                                       " alone exceeds the prompt budget");
        }
        kept.pop_back();  // intentions go last-first, never the prefix
    }
}

std::string assemble_fallback_prompt(const code_model::MethodInfo& focal,
                                     const code_model::SourceClass& cls,
                                     const std::vector<seed::ExemplarSnippet>& exemplars,
                                     const std::vector<BranchIntention>& intentions,
                                     const FunctionIntention& function_intention,
                                     const prompts::TemplateSet& templates,
                                     const seed::PromptBudget& budget) {
    const std::string& tmpl = templates.get("steer_fallback");

    std::vector<BranchIntention> kept = intentions;
    std::vector<seed::ExemplarSnippet> kept_exemplars = exemplars;
    for (;;) {
        std::string ex_section;
        if (!kept_exemplars.empty()) {
            ex_section = "Invocation template:\n";
            for (const auto& e : kept_exemplars) {
                ex_section += e.code;
                if (!strings::ends_with(e.code, "\n")) ex_section += '\n';
            }
            ex_section += '\n';
        }
        std::string rendered = prompts::render(
            tmpl, {{"test_class_name", seed::final_test_class_name(cls, focal)},
                   {"package_name", cls.package_name.empty() ? "test" : cls.package_name},
                   {"focal_signature", focal.signature},
                   {"focal_body", focal.source_text},
                   {"class_context", seed::class_context(cls)},
                   {"exemplars_section", ex_section},
                   {"branch_intentions", intentions_section(kept)},
                   {"function_intention", render_function_intention(function_intention)}});
        if (strings::approx_tokens(rendered) <= budget.max_tokens) return rendered;
        if (!kept.empty()) {
            kept.pop_back();
            continue;
        }
        if (!kept_exemplars.empty()) {
            kept_exemplars.pop_back();
            continue;
        }
        throw seed::PromptOverflow("focal method " + focal.signature +
                                   " alone exceeds the prompt budget");
    }
}

}  // namespace jtgen::steer
