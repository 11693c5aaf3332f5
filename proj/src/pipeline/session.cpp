#include "jtgen/pipeline/session.hpp"

#include "jtgen/seed/refine.hpp"
#include "jtgen/seed/seed_prompt.hpp"
#include "jtgen/steer/steer_prompt.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/toolchain/javac.hpp"

namespace jtgen::pipeline {

namespace stdfs = std::filesystem;

std::string to_string(FailureClass fc) {
    switch (fc) {
        case FailureClass::None: return "none";
        case FailureClass::CompileExhausted: return "compile_exhausted";
        case FailureClass::RuntimeExhausted: return "runtime_exhausted";
        case FailureClass::GatewayError: return "gateway_error";
        case FailureClass::ToolchainError: return "toolchain_error";
    }
    return "none";
}

FailureClass failure_class_from_string(const std::string& s) {
    if (s == "compile_exhausted") return FailureClass::CompileExhausted;
    if (s == "runtime_exhausted") return FailureClass::RuntimeExhausted;
    if (s == "gateway_error") return FailureClass::GatewayError;
    if (s == "toolchain_error") return FailureClass::ToolchainError;
    return FailureClass::None;
}

namespace {

gateway::CompletionRequest make_request(const std::string& prompt, const Services& services) {
    gateway::CompletionRequest req;
    req.messages = {{gateway::Role::User, prompt}};
    req.model_id = services.model_id;
    req.max_tokens = services.max_completion_tokens;
    return req;
}

std::string repair_prompt(const std::string& code, const FixErrors& errors, FixDeps& deps) {
    std::string kind;
    std::string diagnostics;
    if (std::holds_alternative<toolchain::CompileResult>(errors)) {
        kind = "Compiler diagnostics";
        diagnostics = toolchain::format_diagnostics(
            std::get<toolchain::CompileResult>(errors).diagnostics);
    } else {
        kind = "Runtime failures";
        diagnostics =
            toolchain::format_failures(std::get<toolchain::TestRunResult>(errors).failures);
    }
    return prompts::render(deps.templates->get("test_repair"),
                           {{"test_code", code},
                            {"error_kind", kind},
                            {"diagnostics", diagnostics},
                            {"focal_signature", deps.focal_signature}});
}

}  // namespace

FixResult fix(const std::string& test_code, const FixErrors& errors, int delta, FixDeps& deps) {
    FixResult result;
    std::string current = test_code;
    FixErrors current_errors = errors;

    // a runtime-failing input is already compilable
    std::optional<std::string> last_compilable;
    if (std::holds_alternative<toolchain::TestRunResult>(current_errors)) {
        last_compilable = current;
        result.last_run = std::get<toolchain::TestRunResult>(current_errors);
    }

    for (int attempt = 1; attempt <= delta; ++attempt) {
        std::string prompt = repair_prompt(current, current_errors, deps);
        gateway::CompletionRequest req;
        req.messages = {{gateway::Role::User, prompt}};
        req.model_id = deps.model_id;
        req.max_tokens = deps.max_completion_tokens;
        std::string candidate = deps.gateway->complete(req).content;
        result.repair_calls_used = attempt;

        candidate = toolchain::apply_lightweight_fixes(candidate, deps.fix_context);
        stdfs::path file = deps.workspace / (deps.test_class_name + ".java");
        fs::write_file(file, candidate);

        auto compiled = deps.toolchain->compile(file, deps.classpath, deps.workspace);
        if (!compiled.success) {
            current = candidate;
            current_errors = compiled;
            continue;
        }
        auto run = deps.toolchain->run_tests(deps.test_class_name, deps.classpath,
                                             deps.workspace);
        if (run.all_passed()) {
            result.status = FixStatus::Fixed;
            result.code = candidate;
            result.last_run = run;
            return result;
        }
        last_compilable = candidate;
        result.last_run = run;
        current = candidate;
        current_errors = run;
    }

    if (last_compilable) {
        result.status = FixStatus::Partial;
        result.code = *last_compilable;
    } else {
        result.status = FixStatus::Bottom;
    }
    return result;
}

namespace {

struct GenerateOutcome {
    enum class Kind { Passed, Partial, Bottom } kind = Kind::Bottom;
    std::string code;
    toolchain::TestRunResult last_run;
};

// One block of `iterations_left` generate attempts, each followed by a fix
// loop of at most `delta` repairs. A partial candidate ends the block; only
// bottom starts a fresh iteration.
GenerateOutcome generate_and_repair(const std::string& prompt, int& iterations_left, int delta,
                                    Outcome& outcome, Services& services, FixDeps& fix_deps) {
    GenerateOutcome out;
    while (iterations_left > 0) {
        --iterations_left;
        ++outcome.iterations_used;
        outcome.stage_log.push_back("generating");

        ++outcome.gateway_calls;
        std::string candidate = services.gateway->complete(make_request(prompt, services)).content;
        candidate = toolchain::apply_lightweight_fixes(candidate, fix_deps.fix_context);

        stdfs::path file = fix_deps.workspace / (fix_deps.test_class_name + ".java");
        fs::write_file(file, candidate);
        auto compiled = services.toolchain->compile(file, fix_deps.classpath, fix_deps.workspace);

        FixErrors errors;
        bool needs_fix = false;
        if (!compiled.success) {
            errors = compiled;
            needs_fix = true;
        } else {
            auto run = services.toolchain->run_tests(fix_deps.test_class_name,
                                                     fix_deps.classpath, fix_deps.workspace);
            if (run.all_passed()) {
                out.kind = GenerateOutcome::Kind::Passed;
                out.code = candidate;
                out.last_run = run;
                return out;
            }
            errors = run;
            needs_fix = true;
        }

        if (needs_fix) {
            outcome.stage_log.push_back("repairing");
            FixResult fixed = fix(candidate, errors, delta, fix_deps);
            outcome.test_repair_calls += fixed.repair_calls_used;
            outcome.gateway_calls += fixed.repair_calls_used;
            if (fixed.status == FixStatus::Fixed) {
                out.kind = GenerateOutcome::Kind::Passed;
                out.code = fixed.code;
                out.last_run = fixed.last_run;
                return out;
            }
            if (fixed.status == FixStatus::Partial) {
                out.kind = GenerateOutcome::Kind::Partial;
                out.code = fixed.code;
                out.last_run = fixed.last_run;
                return out;
            }
        }
    }
    return out;
}

}  // namespace

Outcome run_focal(const code_model::MethodInfo& focal, const code_model::SourceClass& cls,
                  const SessionConfig& cfg, Services& services, int ordinal) {
    Outcome outcome;
    outcome.focal_signature = focal.signature;
    outcome.project = services.project_name;

    std::string suffix = ordinal > 0 ? "_" + std::to_string(ordinal + 1) : "";
    std::string test_class = seed::final_test_class_name(cls, focal) + suffix;
    std::string seed_class = seed::seed_test_class_name(cls, focal) + suffix;
    outcome.test_class_name = test_class;

    stdfs::path workspace = services.workspace_root / test_class;
    stdfs::create_directories(workspace);

    toolchain::FixContext fix_ctx;
    fix_ctx.known_imports = services.known_imports;
    fix_ctx.expected_package = cls.package_name;

    FixDeps fix_deps;
    fix_deps.gateway = services.gateway;
    fix_deps.toolchain = services.toolchain;
    fix_deps.templates = services.templates;
    fix_deps.fix_context = fix_ctx;
    fix_deps.fix_context.expected_class_name = test_class;
    fix_deps.workspace = workspace;
    fix_deps.classpath = services.project_classpath;
    fix_deps.model_id = services.model_id;
    fix_deps.max_completion_tokens = services.max_completion_tokens;
    fix_deps.focal_signature = focal.signature;
    fix_deps.test_class_name = test_class;

    int iterations_left = cfg.max_iterations;

    try {
        // ---- Seed ----
        outcome.stage_log.push_back("seeding");
        auto source_exemplars =
            seed::mine_source_exemplars(cls, *services.corpus, focal);
        std::vector<seed::ExemplarSnippet> exemplars;
        static const std::vector<seed::EvoSuiteTestClass> kNoTests;
        const auto& evo_tests = services.evosuite_tests ? *services.evosuite_tests : kNoTests;
        if (seed::select_path(source_exemplars) == seed::SeedPath::Path1) {
            exemplars = source_exemplars;
            auto supplement = seed::mine_evosuite_exemplars(evo_tests, focal, 3);
            exemplars.insert(exemplars.end(), supplement.begin(), supplement.end());
        } else {
            exemplars = seed::mine_evosuite_exemplars(evo_tests, focal, 5);
        }

        seed::PromptBudget budget{services.prompt_token_budget};
        std::string seed_prompt =
            seed::build_seed_prompt(focal, cls, exemplars, *services.templates, budget);

        ++outcome.gateway_calls;
        std::string candidate =
            services.gateway->complete(make_request(seed_prompt, services)).content;

        seed::RefineDeps refine_deps;
        refine_deps.gateway = services.gateway;
        refine_deps.toolchain = services.toolchain;
        refine_deps.templates = services.templates;
        refine_deps.fix_context = fix_ctx;
        refine_deps.fix_context.expected_class_name = seed_class;
        refine_deps.workspace = workspace;
        refine_deps.classpath = services.project_classpath;
        refine_deps.model_id = services.model_id;
        refine_deps.max_completion_tokens = services.max_completion_tokens;
        refine_deps.max_rounds = cfg.max_seed_rounds;

        seed::SeedPrefix prefix = seed::refine_seed(candidate, focal, cls, refine_deps);
        outcome.seed_repair_calls = prefix.repair_rounds_used;
        outcome.gateway_calls += prefix.repair_rounds_used;

        if (prefix.compile_status == seed::CompileStatus::Passed) {
            fs::write_file(services.output_root / "seeds" / (seed_class + ".java"), prefix.code);
        }

        // intentions are shared by steer and fallback; computed lazily once
        std::optional<std::vector<steer::BranchIntention>> intentions;
        std::optional<steer::FunctionIntention> function_intention;
        auto ensure_intentions = [&]() {
            if (intentions) return;
            auto points = steer::extract_branch_points(focal);
            steer::IntentionDeps ideps;
            ideps.gateway = services.gateway;
            ideps.templates = services.templates;
            ideps.model_id = services.model_id;
            if (!points.empty()) ++outcome.gateway_calls;
            intentions = steer::infer_branch_intentions(points, focal, ideps);
            ++outcome.gateway_calls;
            function_intention = steer::summarize_function_intention(focal, cls, ideps);
        };

        GenerateOutcome gen;

        if (prefix.compile_status == seed::CompileStatus::Passed) {
            // ---- Steer ----
            outcome.stage_log.push_back("steering");
            ensure_intentions();
            steer::SteerPrompt steer_prompt = steer::assemble_steer_prompt(
                prefix, *intentions, *function_intention, *services.templates, budget);

            // ---- Generate & Repair ----
            gen = generate_and_repair(steer_prompt.rendered, iterations_left, cfg.delta,
                                      outcome, services, fix_deps);
        }

        if (gen.kind == GenerateOutcome::Kind::Bottom && cfg.fallback_enabled) {
            outcome.used_fallback = true;
            outcome.stage_log.push_back("fallback");
            ensure_intentions();
            std::string fallback_prompt = steer::assemble_fallback_prompt(
                focal, cls, exemplars, *intentions, *function_intention, *services.templates,
                budget);
            gen = generate_and_repair(fallback_prompt, iterations_left, cfg.delta, outcome,
                                      services, fix_deps);
        }

        if (gen.kind == GenerateOutcome::Kind::Bottom) {
            outcome.failure_class = FailureClass::CompileExhausted;
            outcome.stage_log.push_back("failed");
            return outcome;
        }

        outcome.compiled = true;
        std::string artifact = "tests/" + test_class + ".java";
        fs::write_file(services.output_root / artifact, gen.code);
        outcome.test_file = artifact;

        if (gen.kind == GenerateOutcome::Kind::Passed) {
            outcome.tests_passed = true;
        }

        // coverage is recorded for passing and partial-valid tests alike
        try {
            auto coverage = services.toolchain->measure_coverage(
                test_class, services.project_classpath, {focal.signature}, workspace);
            outcome.coverage = coverage.find(focal.signature);
        } catch (const Error&) {
            outcome.coverage = std::nullopt;
        }

        if (gen.kind == GenerateOutcome::Kind::Partial) {
            if (outcome.coverage) {
                outcome.partial_valid = true;
            } else {
                // compilable but unfixable at runtime, and no coverage to record
                outcome.failure_class = FailureClass::RuntimeExhausted;
            }
        }
        outcome.stage_log.push_back("done");
        return outcome;
    } catch (const gateway::GatewayError&) {
        outcome.failure_class = FailureClass::GatewayError;
    } catch (const Error&) {
        outcome.failure_class = FailureClass::ToolchainError;
    }
    outcome.stage_log.push_back("failed");
    return outcome;
}

}  // namespace jtgen::pipeline
