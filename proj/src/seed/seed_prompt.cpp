#include "jtgen/seed/seed_prompt.hpp"

#include "jtgen/support/strings.hpp"

namespace jtgen::seed {

std::string class_context(const code_model::SourceClass& cls) {
    std::string out;
    for (const auto& f : cls.fields) {
        std::string mods = strings::join({f.modifiers.begin(), f.modifiers.end()}, " ");
        out += (mods.empty() ? "" : mods + " ") + f.declared_type + " " + f.name + ";\n";
    }
    for (const auto& m : cls.methods) {
        if (m.is_constructor) {
            out += m.source_text;
            out += '\n';
        }
    }
    if (out.empty()) out = "(no fields or explicit constructors)\n";
    return out;
}

std::string seed_test_class_name(const code_model::SourceClass& cls,
                                 const code_model::MethodInfo& focal) {
    return cls.name + "_" + focal.name + "_SeedTest";
}

std::string final_test_class_name(const code_model::SourceClass& cls,
                                  const code_model::MethodInfo& focal) {
    return cls.name + "_" + focal.name + "_Test";
}

namespace {

std::string exemplars_section(const std::vector<ExemplarSnippet>& exemplars) {
    if (exemplars.empty()) return "";
    std::string out = "The following are correct invocation examples:\n\n";
    for (std::size_t i = 0; i < exemplars.size(); ++i) {
        out += "Example " + std::to_string(i + 1) + " (from " +
               exemplars[i].provenance_method + "):\n";
        out += exemplars[i].code;
        if (!strings::ends_with(exemplars[i].code, "\n")) out += '\n';
        out += '\n';
    }
    return out;
}

}  // namespace

std::string build_seed_prompt(const code_model::MethodInfo& focal,
                              const code_model::SourceClass& cls,
                              const std::vector<ExemplarSnippet>& exemplars,
                              const prompts::TemplateSet& templates,
                              const PromptBudget& budget) {
    const std::string& tmpl = templates.get("seed");
    std::string context = class_context(cls);

    std::vector<ExemplarSnippet> kept = exemplars;
    bool context_dropped = false;
    for (;;) {
        std::map<std::string, std::string> vars{
            {"focal_signature", focal.signature},
            {"focal_body", focal.source_text},
            {"class_context", context_dropped ? std::string("(trimmed for budget)\n") : context},
            {"exemplars_section", exemplars_section(kept)},
            {"test_class_name", seed_test_class_name(cls, focal)},
            {"package_name", cls.package_name.empty() ? "test" : cls.package_name},
        };
        std::string rendered = prompts::render(tmpl, vars);
        if (strings::approx_tokens(rendered) <= budget.max_tokens) return rendered;
        if (!kept.empty()) {
            kept.pop_back();  // trim exemplars last-first
            continue;
        }
        if (!context_dropped) {
            context_dropped = true;
            continue;
        }
        throw PromptOverflow("focal method " + focal.signature +
                             " alone exceeds the prompt budget of " +
                             std::to_string(budget.max_tokens) + " tokens");
    }
}

std::string build_seed_repair_prompt(const std::string& test_code,
                                     const std::string& diagnostics_text,
                                     const std::string& focal_signature,
                                     const prompts::TemplateSet& templates) {
    return prompts::render(templates.get("seed_repair"),
                           {{"test_code", test_code},
                            {"diagnostics", diagnostics_text},
                            {"focal_signature", focal_signature}});
}

}  // namespace jtgen::seed
