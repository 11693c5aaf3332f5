#include "jtgen/seed/refine.hpp"

#include "jtgen/code_model/parser.hpp"
#include "jtgen/seed/assertions.hpp"
#include "jtgen/seed/seed_prompt.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/toolchain/javac.hpp"

namespace jtgen::seed {

std::string to_string(CompileStatus status) {
    switch (status) {
        case CompileStatus::Unverified: return "unverified";
        case CompileStatus::Passed: return "passed";
        case CompileStatus::Failed: return "failed";
    }
    return "unverified";
}

PreparedPrefix prepare_prefix_candidate(const std::string& candidate,
                                        const code_model::MethodInfo& focal) {
    PreparedPrefix out;
    auto stripped = strip_assertions(candidate);
    out.code = std::move(stripped.code);
    out.marker_count = stripped.marker_count;

    const int arity = static_cast<int>(focal.params.size());
    auto calls = code_model::extract_invocations_from_text(out.code);
    std::size_t last_focal_offset = std::string::npos;
    for (const auto& c : calls) {
        if (c.callee_name != focal.name || c.arg_count != arity) continue;
        out.invokes_focal = true;
    }

    if (out.invokes_focal && out.marker_count == 0) {
        // insert one marker after the last focal-call statement
        std::size_t search = 0;
        for (;;) {
            std::size_t hit = out.code.find(focal.name + "(", search);
            if (hit == std::string::npos) {
                hit = out.code.find(focal.name, search);
                if (hit == std::string::npos) break;
            }
            std::size_t semi = out.code.find(';', hit);
            if (semi == std::string::npos) break;
            last_focal_offset = semi;
            search = hit + focal.name.size();
        }
        if (last_focal_offset != std::string::npos) {
            // keep the statement's indentation for the marker line
            std::size_t line_start = out.code.rfind('\n', last_focal_offset);
            std::string indent;
            if (line_start != std::string::npos) {
                std::size_t k = line_start + 1;
                while (k < out.code.size() && (out.code[k] == ' ' || out.code[k] == '\t')) {
                    indent += out.code[k];
                    ++k;
                }
            }
            out.code.insert(last_focal_offset + 1, "\n" + indent + kAssertMarker);
            out.marker_count = 1;
        }
    }
    return out;
}

SeedPrefix refine_seed(const std::string& prefix_candidate,
                       const code_model::MethodInfo& focal,
                       const code_model::SourceClass& cls, RefineDeps& deps) {
    SeedPrefix result;
    result.focal_signature = focal.signature;

    const std::string expected_name = seed_test_class_name(cls, focal);
    deps.fix_context.expected_class_name = expected_name;

    std::string code = prefix_candidate;
    int repair_calls = 0;

    for (;;) {
        std::string fixed = toolchain::apply_lightweight_fixes(code, deps.fix_context);
        PreparedPrefix prepared = prepare_prefix_candidate(fixed, focal);

        toolchain::CompileResult compiled;
        if (!prepared.invokes_focal) {
            compiled.success = false;
            compiled.diagnostics.push_back(toolchain::Diagnostic{
                expected_name + ".java", 1,
                "the test prefix must invoke " + focal.signature,
                toolchain::DiagnosticKind::Error});
        } else {
            std::filesystem::path file = deps.workspace / (expected_name + ".java");
            fs::write_file(file, prepared.code);
            compiled = deps.toolchain->compile(file, deps.classpath, deps.workspace);
        }

        if (compiled.success) {
            result.code = prepared.code;
            result.todo_marker_count = prepared.marker_count;
            result.compile_status = CompileStatus::Passed;
            result.repair_rounds_used = repair_calls;
            return result;
        }
        if (repair_calls >= deps.max_rounds) {
            result.code = prepared.code;
            result.todo_marker_count = prepared.marker_count;
            result.compile_status = CompileStatus::Failed;
            result.repair_rounds_used = repair_calls;
            return result;
        }

        std::string prompt = build_seed_repair_prompt(
            prepared.code, toolchain::format_diagnostics(compiled.diagnostics),
            focal.signature, *deps.templates);
        gateway::CompletionRequest req;
        req.messages = {{gateway::Role::User, prompt}};
        req.model_id = deps.model_id;
        req.max_tokens = deps.max_completion_tokens;
        code = deps.gateway->complete(req).content;
        ++repair_calls;
    }
}

}  // namespace jtgen::seed
