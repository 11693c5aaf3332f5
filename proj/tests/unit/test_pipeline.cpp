#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "jtgen/code_model/project_scan.hpp"
#include "jtgen/pipeline/aggregate.hpp"
#include "jtgen/pipeline/records.hpp"
#include "jtgen/pipeline/session.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/toolchain/stub.hpp"

using namespace jtgen;
using namespace jtgen::pipeline;
namespace stdfs = std::filesystem;

namespace {

const std::string kFixtureRoot = JTGEN_FIXTURE_DIR;
const std::string kResourceRoot = JTGEN_RESOURCE_DIR;

enum class Phase {
    SeedInitial,
    SeedRepair,
    BranchIntentions,
    FunctionIntention,
    Steer,
    Fallback,
    TestRepair,
    Unknown,
};

Phase classify_prompt(const std::string& prompt) {
    using strings::contains;
    if (contains(prompt, "generating a JUnit 4 test prefix")) return Phase::SeedInitial;
    if (contains(prompt, "test prefix fails to compile")) return Phase::SeedRepair;
    if (contains(prompt, "Describe when each branch point")) return Phase::BranchIntentions;
    if (contains(prompt, "Summarize the Java method")) return Phase::FunctionIntention;
    if (contains(prompt, "Complete the JUnit 4 test class below")) return Phase::Steer;
    if (contains(prompt, "Write a complete JUnit 4 test class named")) return Phase::Fallback;
    if (contains(prompt, "The following JUnit 4 test fails")) return Phase::TestRepair;
    return Phase::Unknown;
}

// Scripted per-phase gateway: deterministic code by phase, with an optional
// curve for the test-repair sequence.
struct PhaseScript {
    std::string seed_code;
    std::string generated_code;
    std::function<std::string(int attempt)> repair_curve;  // 1-based attempt index

    std::map<Phase, int> phase_counts;
    int repair_attempts = 0;

    gateway::CompletionResponse respond(const gateway::CompletionRequest& req) {
        const std::string& prompt = req.messages.back().content;
        Phase phase = classify_prompt(prompt);
        phase_counts[phase]++;
        std::string content;
        switch (phase) {
            case Phase::SeedInitial:
            case Phase::SeedRepair:
                content = seed_code;
                break;
            case Phase::BranchIntentions:
                content = "1. first branch\n2. second branch\n";
                break;
            case Phase::FunctionIntention:
                content = "purpose: scripted purpose\nio: i\nside_effects: none\ncorner_cases: c\n";
                break;
            case Phase::Steer:
            case Phase::Fallback:
                content = generated_code;
                break;
            case Phase::TestRepair:
                ++repair_attempts;
                content = repair_curve ? repair_curve(repair_attempts) : generated_code;
                break;
            case Phase::Unknown:
                content = "";
                break;
        }
        return gateway::CompletionResponse{content, gateway::FinishReason::Stop, 1, 1};
    }
};

const char* kGoodSeed =
    "package com.fixture;\n\npublic class Seed {\n"
    "    public void invoke() {\n"
    "        Branchy b = new Branchy();\n"
    "        int out = b.process(new int[]{1, 2}, 1);\n"
    "        // TODO: assert here\n"
    "    }\n"
    "}\n";

const char* kBadSeed = "public class Seed { void t() { Branchy b = new Branchy(); "
                       "b.process(new int[]{1}, 0); } } // STUB:NOCOMPILE\n";

const char* kPassingTest =
    "package com.fixture;\n\npublic class Branchy_process_Test {\n"
    "    public void test0() {\n"
    "        Branchy b = new Branchy();\n"
    "        int out = b.process(new int[]{1, 2}, 1);\n"
    "    }\n"
    "}\n";

const char* kNoCompileTest = "public class T { } // STUB:NOCOMPILE\n";
const char* kRuntimeFailTest =
    "package com.fixture;\n\npublic class Branchy_process_Test {\n"
    "    public void test0() { } // STUB:RUNTIME_FAIL\n"
    "}\n";

struct Harness {
    std::vector<code_model::SourceClass> corpus;
    prompts::TemplateSet templates =
        prompts::TemplateSet::load(kResourceRoot + std::string("/prompts"));
    toolchain::StubToolchain stub_toolchain;
    gateway::StubGateway stub_gateway;
    PhaseScript script;
    stdfs::path root;

    Harness() {
        auto scanned = code_model::scan_project(kFixtureRoot + "/javaproj/src", {});
        corpus = std::move(scanned.classes);
        root = stdfs::temp_directory_path() /
               ("jtgen_pipe_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        stdfs::remove_all(root);
    }

    ~Harness() {
        std::error_code ec;
        stdfs::remove_all(root, ec);
    }

    Services services() {
        stub_gateway.set_responder(
            [this](const gateway::CompletionRequest& req, std::size_t) {
                return script.respond(req);
            });
        Services s;
        s.gateway = &stub_gateway;
        s.toolchain = &stub_toolchain;
        s.templates = &templates;
        s.corpus = &corpus;
        s.workspace_root = root / "work";
        s.output_root = root / "out";
        s.model_id = "stub-model";
        s.project_name = "fixture";
        return s;
    }

    const code_model::SourceClass& cls(const std::string& name) const {
        for (const auto& c : corpus) {
            if (c.name == name) return c;
        }
        static code_model::SourceClass dummy;
        return dummy;
    }

    const code_model::MethodInfo& method(const std::string& c, const std::string& m) const {
        for (const auto& mm : cls(c).methods) {
            if (mm.name == m) return mm;
        }
        static code_model::MethodInfo dummy;
        return dummy;
    }
};

bool stages_monotone(const std::vector<std::string>& log) {
    // seeding < steering < generating/repairing; "fallback" restarts once
    auto rank = [](const std::string& s) {
        if (s == "seeding") return 0;
        if (s == "steering") return 1;
        if (s == "generating") return 2;
        if (s == "repairing") return 3;
        if (s == "done" || s == "failed") return 9;
        return -1;  // fallback marker
    };
    int prev = 0;
    bool fallback_seen = false;
    for (const auto& s : log) {
        int r = rank(s);
        if (r < 0) {
            if (fallback_seen) return false;  // at most one restart
            fallback_seen = true;
            prev = 1;  // restart below generating
            continue;
        }
        // generating may follow repairing when a new iteration begins
        if (r < prev && !(r == 2 && prev == 3)) return false;
        prev = r;
    }
    return true;
}

}  // namespace

TEST_CASE("run_focal: first-try success means zero repair calls") {
    Harness h;
    h.script.seed_code = kGoodSeed;
    h.script.generated_code = kPassingTest;
    auto services = h.services();

    SessionConfig cfg;
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

    CHECK(outcome.compiled);
    CHECK(outcome.tests_passed);
    CHECK_FALSE(outcome.partial_valid);
    CHECK(outcome.failure_class == FailureClass::None);
    CHECK(outcome.seed_repair_calls == 0);
    CHECK(outcome.test_repair_calls == 0);
    CHECK(outcome.iterations_used == 1);
    CHECK(outcome.coverage.has_value());
    CHECK(stages_monotone(outcome.stage_log));
    // seed + branch batch + function + generate
    CHECK(h.stub_gateway.call_count() == 4);
    CHECK(stdfs::exists(services.output_root / "tests" / "Branchy_process_Test.java"));
    CHECK(stdfs::exists(services.output_root / "seeds" / "Branchy_process_SeedTest.java"));
}

TEST_CASE("run_focal: always-failing backend hits every budget exactly") {
    Harness h;
    h.script.seed_code = kBadSeed;
    h.script.generated_code = kNoCompileTest;
    h.script.repair_curve = [](int) { return std::string(kNoCompileTest); };
    auto services = h.services();

    SessionConfig cfg;  // delta 5, seed rounds 5, iterations 5
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

    CHECK_FALSE(outcome.compiled);
    CHECK(outcome.failure_class == FailureClass::CompileExhausted);
    CHECK(outcome.used_fallback);
    CHECK(outcome.seed_repair_calls == 5);
    CHECK(outcome.iterations_used == 5);
    CHECK(outcome.test_repair_calls == 25);  // exactly delta per iteration
    CHECK(h.script.phase_counts[Phase::SeedRepair] == 5);
    CHECK(h.script.phase_counts[Phase::Fallback] == 5);
    // budget law: repair calls never exceed max_seed_rounds + max_iterations * delta
    CHECK(outcome.seed_repair_calls + outcome.test_repair_calls <=
          cfg.max_seed_rounds + cfg.max_iterations * cfg.delta);
    CHECK(stages_monotone(outcome.stage_log));
}

TEST_CASE("run_focal: fix-on-attempt-k uses exactly k repair calls") {
    for (int k : {1, 3, 5}) {
        Harness h;
        h.script.seed_code = kGoodSeed;
        h.script.generated_code = kNoCompileTest;
        h.script.repair_curve = [k](int attempt) {
            return attempt >= k ? std::string(kPassingTest) : std::string(kNoCompileTest);
        };
        auto services = h.services();

        SessionConfig cfg;
        auto outcome =
            run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

        CHECK(outcome.compiled);
        CHECK(outcome.tests_passed);
        CHECK_MESSAGE(outcome.test_repair_calls == k, "k = " << k);
        CHECK(outcome.iterations_used == 1);
    }
}

TEST_CASE("run_focal: persistent runtime failure yields partial_valid with coverage") {
    Harness h;
    h.script.seed_code = kGoodSeed;
    h.script.generated_code = kRuntimeFailTest;
    h.script.repair_curve = [](int) { return std::string(kRuntimeFailTest); };
    auto services = h.services();

    SessionConfig cfg;
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

    CHECK(outcome.compiled);
    CHECK_FALSE(outcome.tests_passed);
    CHECK(outcome.partial_valid);
    REQUIRE(outcome.coverage.has_value());
    CHECK(outcome.coverage->branches_covered == 3);
    CHECK(outcome.failure_class == FailureClass::None);
    CHECK(outcome.test_repair_calls == 5);  // the full fix budget was spent
    CHECK(outcome.iterations_used == 1);    // partial ends the session
}

TEST_CASE("run_focal: seed failure falls back once and can still succeed") {
    Harness h;
    h.script.seed_code = kBadSeed;          // seed never compiles
    h.script.generated_code = kPassingTest; // but the fallback generation works
    auto services = h.services();

    SessionConfig cfg;
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

    CHECK(outcome.used_fallback);
    CHECK(outcome.compiled);
    CHECK(outcome.tests_passed);
    CHECK(outcome.seed_repair_calls == 5);
    CHECK(outcome.test_repair_calls == 0);
    CHECK(h.script.phase_counts[Phase::Steer] == 0);  // three-stage never generated
    CHECK(h.script.phase_counts[Phase::Fallback] == 1);
}

TEST_CASE("run_focal: fallback disabled reports compile_exhausted") {
    Harness h;
    h.script.seed_code = kBadSeed;
    h.script.generated_code = kPassingTest;
    auto services = h.services();

    SessionConfig cfg;
    cfg.fallback_enabled = false;
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);

    CHECK_FALSE(outcome.compiled);
    CHECK_FALSE(outcome.used_fallback);
    CHECK(outcome.failure_class == FailureClass::CompileExhausted);
    CHECK(h.script.phase_counts[Phase::Fallback] == 0);
}

TEST_CASE("run_focal: gateway errors terminate with the gateway failure class") {
    Harness h;
    auto services = h.services();
    gateway::StubGateway throwing;
    throwing.set_responder([](const gateway::CompletionRequest&, std::size_t)
                               -> gateway::CompletionResponse {
        throw gateway::TransportError("scripted transport failure");
    });
    services.gateway = &throwing;

    SessionConfig cfg;
    auto outcome = run_focal(h.method("Branchy", "process"), h.cls("Branchy"), cfg, services);
    CHECK(outcome.failure_class == FailureClass::GatewayError);
    CHECK_FALSE(outcome.compiled);
}

TEST_CASE("records: outcome round-trips through its JSON line") {
    Outcome o;
    o.focal_signature = "com.fixture.Branchy#process(int[], int)";
    o.project = "fixture";
    o.compiled = true;
    o.partial_valid = true;
    o.coverage = toolchain::MethodCoverage{3, 4, 10, 12};
    o.stage_log = {"seeding", "steering", "generating", "done"};
    o.test_repair_calls = 5;

    auto line = outcome_to_json_line(o);
    auto back = outcome_from_json_line(line);
    CHECK(back.focal_signature == o.focal_signature);
    CHECK(back.partial_valid);
    REQUIRE(back.coverage.has_value());
    CHECK(back.coverage->lines_total == 12);
    CHECK(back.stage_log == o.stage_log);
    // identical content, identical bytes
    CHECK(outcome_to_json_line(back) == line);
}

TEST_CASE("records: malformed lines are skipped and counted") {
    auto path = stdfs::temp_directory_path() / "jtgen_records_test.ndjson";
    stdfs::remove(path);
    Outcome o;
    o.focal_signature = "a#b()";
    append_record(path, o);
    fs::append_line(path, "not json at all {");
    append_record(path, o);

    auto loaded = load_records(path);
    CHECK(loaded.outcomes.size() == 2);
    CHECK(loaded.skipped == 1);
}

TEST_CASE("aggregate: 9 of 10 compiled, 7 passed, rates match hand arithmetic") {
    std::vector<Outcome> outcomes;
    for (int i = 0; i < 10; ++i) {
        Outcome o;
        o.focal_signature = "f#" + std::to_string(i) + "()";
        o.project = i < 4 ? "alpha" : "beta";
        o.compiled = i != 9;
        o.tests_passed = i < 7;
        outcomes.push_back(o);
    }
    auto report = aggregate(outcomes, {}, "run");
    CHECK(report.overall.compile_rate() == doctest::Approx(0.9));
    CHECK(report.overall.pass_rate() == doctest::Approx(0.7));
    CHECK(report.by_project.at("alpha").total == 4);
    CHECK(report.by_project.at("beta").total == 6);

    auto md = report_to_markdown(report);
    CHECK(strings::contains(md, "| Method | Projects | Focal methods | Compile passed Rate | "
                                "Test Passed Rate | Branch Coverage | Line Coverage |"));
    CHECK(strings::contains(md, "90.00%"));
    CHECK(strings::contains(md, "70.00%"));
}

TEST_CASE("aggregate: partial_valid counts as compiled, never as passed") {
    std::vector<Outcome> outcomes;
    for (int i = 0; i < 4; ++i) {
        Outcome o;
        o.focal_signature = "f#" + std::to_string(i) + "()";
        o.compiled = true;
        o.partial_valid = true;
        o.coverage = toolchain::MethodCoverage{1, 2, 5, 10};
        outcomes.push_back(o);
    }
    auto report = aggregate(outcomes, {});
    CHECK(report.overall.compile_rate() == doctest::Approx(1.0));
    CHECK(report.overall.pass_rate() == doctest::Approx(0.0));
    CHECK(report.overall.mean_branch() == doctest::Approx(50.0));
    CHECK(report.overall.mean_line() == doctest::Approx(50.0));
}

TEST_CASE("aggregate: binned populations sum to the corpus size") {
    std::vector<Outcome> outcomes;
    ComplexityIndex index;
    for (int i = 0; i < 12; ++i) {
        Outcome o;
        o.focal_signature = "f#" + std::to_string(i) + "()";
        o.compiled = i % 2 == 0;
        outcomes.push_back(o);
        ComplexityKey key;
        if (i < 9) key.init_bin = i % 3;  // three bins; the rest unscored
        key.ccn = 1 + i;
        index[o.focal_signature] = key;
    }
    auto report = aggregate(outcomes, index);
    int population = 0;
    for (const auto& [bin, cell] : report.by_init_bin) population += cell.total;
    CHECK(population == 12);
    CHECK(report.by_init_bin.at(-1).total == 3);
    CHECK(report.by_init_bin.at(0).total == 3);

    // per-bin recount for bin 0: methods 0,3,6 -> compiled 0 and 6
    CHECK(report.by_init_bin.at(0).compiled == 2);
    CHECK(report.by_ccn_group.at("1-2").total == 2);
    CHECK(report.by_ccn_group.at("11-14").total == 2);
}

TEST_CASE("aggregate: csv and json emit every scope") {
    std::vector<Outcome> outcomes(3);
    for (int i = 0; i < 3; ++i) outcomes[i].focal_signature = "f#" + std::to_string(i) + "()";
    auto report = aggregate(outcomes, {});
    auto csv = report_to_csv(report);
    CHECK(strings::contains(csv, "overall,total,3"));
    auto js = report_to_json(report);
    CHECK(strings::contains(js, "\"by_init_complexity_bin\""));
}
