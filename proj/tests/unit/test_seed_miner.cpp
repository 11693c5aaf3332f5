#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "jtgen/code_model/parser.hpp"
#include "jtgen/code_model/project_scan.hpp"
#include "jtgen/gateway/gateway.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/seed/assertions.hpp"
#include "jtgen/seed/evosuite.hpp"
#include "jtgen/seed/exemplars.hpp"
#include "jtgen/seed/refine.hpp"
#include "jtgen/seed/seed_prompt.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/toolchain/stub.hpp"

using namespace jtgen;
using namespace jtgen::seed;
namespace stdfs = std::filesystem;

namespace {

const std::string kFixtureRoot = JTGEN_FIXTURE_DIR;
const std::string kResourceRoot = JTGEN_RESOURCE_DIR;

struct Corpus {
    std::vector<code_model::SourceClass> classes;

    const code_model::SourceClass& cls(const std::string& name) const {
        for (const auto& c : classes) {
            if (c.name == name) return c;
        }
        REQUIRE_MESSAGE(false, "class not found: " << name);
        static code_model::SourceClass dummy;
        return dummy;
    }

    const code_model::MethodInfo& method(const std::string& cls_name,
                                         const std::string& m_name, int arity = -1) const {
        for (const auto& m : cls(cls_name).methods) {
            if (m.name == m_name && (arity < 0 || int(m.params.size()) == arity)) return m;
        }
        REQUIRE_MESSAGE(false, "method not found: " << m_name);
        static code_model::MethodInfo dummy;
        return dummy;
    }
};

Corpus load_corpus() {
    auto scanned = code_model::scan_project(kFixtureRoot + "/javaproj/src", {});
    REQUIRE(scanned.diagnostics.empty());
    return Corpus{std::move(scanned.classes)};
}

std::vector<EvoSuiteTestClass> load_evosuite_fixture() {
    return ingest_generated_tests(kFixtureRoot + std::string("/evosuite"));
}

int count_focal_calls(const std::string& code, const code_model::MethodInfo& focal) {
    auto calls = code_model::extract_invocations_from_text(code);
    int n = 0;
    for (const auto& c : calls) {
        if (c.callee_name == focal.name && c.arg_count == int(focal.params.size())) ++n;
    }
    return n;
}

}  // namespace

// ---- strip_assertions -------------------------------------------------------

TEST_CASE("strip: single assertEquals becomes one marker") {
    auto r = strip_assertions("assertEquals(a, b);\n");
    CHECK(r.marker_count == 1);
    CHECK(r.code == std::string(kAssertMarker) + "\n");
}

TEST_CASE("strip: code without assertions is byte-identical, count 0") {
    const std::string code = "TextKit kit = new TextKit(\"-\");\nString s = kit.trim(x);\n";
    auto r = strip_assertions(code);
    CHECK(r.marker_count == 0);
    CHECK(r.code == code);
}

TEST_CASE("strip: mixed fixture matches the hand-stripped golden file") {
    auto input = fs::read_file(kFixtureRoot + std::string("/strip/Mixed_Test.java"));
    auto golden = fs::read_file(kFixtureRoot + std::string("/strip/Mixed_Test_stripped.java"));
    auto r = strip_assertions(input);
    CHECK(r.marker_count == 3);
    CHECK(r.code == golden);
}

TEST_CASE("strip: idempotent") {
    auto input = fs::read_file(kFixtureRoot + std::string("/strip/Mixed_Test.java"));
    auto once = strip_assertions(input);
    auto twice = strip_assertions(once.code);
    CHECK(twice.marker_count == 0);
    CHECK(twice.code == once.code);
}

TEST_CASE("strip: assertion expressions inside other statements stay put") {
    const std::string code = "boolean ok = verify(assertLike);\nint failCount = fail0(x);\n";
    auto r = strip_assertions(code);
    CHECK(r.marker_count == 0);
    CHECK(r.code == code);
}

TEST_CASE("strip: assertThrows and static-qualified chains are caught") {
    const std::string code =
        "assertThrows(IllegalStateException.class, () -> kit.join(null, 1));\n"
        "org.junit.Assert.fail();\n";
    auto r = strip_assertions(code);
    CHECK(r.marker_count == 2);
    CHECK(strings::count_occurrences(r.code, kAssertMarker) == 2);
}

TEST_CASE("strip: removal variant drops statements without markers") {
    const std::string code = "int x = 1;\nassertEquals(1, x);\nuse(x);\n";
    auto removed = remove_assertion_statements(code);
    CHECK_FALSE(strings::contains(removed, "assertEquals"));
    CHECK_FALSE(strings::contains(removed, kAssertMarker));
    CHECK(strings::contains(removed, "int x = 1;"));
    CHECK(strings::contains(removed, "use(x);"));
}

// ---- exemplar mining --------------------------------------------------------

TEST_CASE("mine_source: sibling caller yields one snippet with prep statements") {
    auto corpus = load_corpus();
    const auto& focal = corpus.method("TextKit", "capitalize");
    auto snippets = mine_source_exemplars(corpus.cls("TextKit"), corpus.classes, focal);
    REQUIRE(snippets.size() == 1);
    CHECK(snippets[0].provenance_method == "describe");
    CHECK(strings::contains(snippets[0].code, "new TextKit(\"_\")"));
    CHECK(count_focal_calls(snippets[0].code, focal) == 1);
}

TEST_CASE("mine_source: two callers yield two snippets in deterministic order") {
    auto corpus = load_corpus();
    const auto& focal = corpus.method("TextKit", "join");
    auto snippets = mine_source_exemplars(corpus.cls("TextKit"), corpus.classes, focal);
    REQUIRE(snippets.size() == 2);
    // owning class first, then corpus order
    CHECK(snippets[0].provenance_method == "assemble");
    CHECK(snippets[1].provenance_method == "banner");
    for (const auto& s : snippets) {
        CHECK(count_focal_calls(s.code, focal) == 1);
        CHECK(strip_assertions(s.code).marker_count == 0);
    }
}

TEST_CASE("mine_source: no caller anywhere yields empty") {
    auto corpus = load_corpus();
    const auto& focal = corpus.method("Branchy", "flat");
    auto snippets = mine_source_exemplars(corpus.cls("Branchy"), corpus.classes, focal);
    CHECK(snippets.empty());
    CHECK(select_path(snippets) == SeedPath::Path2);
}

TEST_CASE("mine_evosuite: cap semantics and source order") {
    auto corpus = load_corpus();
    auto tests = load_evosuite_fixture();
    REQUIRE(tests.size() == 1);  // scaffolding file skipped
    const auto& focal = corpus.method("TextKit", "capitalize");

    auto five = mine_evosuite_exemplars(tests, focal, 5);
    REQUIRE(five.size() == 5);
    CHECK(five[0].provenance_method == "test0");
    CHECK(five[4].provenance_method == "test4");

    auto three = mine_evosuite_exemplars(tests, focal, 3);
    CHECK(three.size() == 3);

    const auto& parse_focal = corpus.method("TextKit", "parseOrDefault");
    auto both = mine_evosuite_exemplars(tests, parse_focal, 3);
    CHECK(both.size() == 1);  // only test7 matches; cap not reached
}

TEST_CASE("mine_evosuite: snippets carry one focal call and zero assertions") {
    auto corpus = load_corpus();
    auto tests = load_evosuite_fixture();
    const auto& focal = corpus.method("TextKit", "capitalize");
    for (const auto& s : mine_evosuite_exemplars(tests, focal, 5)) {
        CHECK(count_focal_calls(s.code, focal) == 1);
        CHECK(strip_assertions(s.code).marker_count == 0);
        CHECK(s.origin == ExemplarOrigin::EvoSuite);
    }
}

TEST_CASE("select_path: path1 iff source exemplars exist") {
    CHECK(select_path({ExemplarSnippet{}}) == SeedPath::Path1);
    CHECK(select_path({}) == SeedPath::Path2);
}

// ---- seed prompt ------------------------------------------------------------

TEST_CASE("seed prompt: valid with zero exemplars, deterministic bytes") {
    auto corpus = load_corpus();
    auto templates = prompts::TemplateSet::load(kResourceRoot + std::string("/prompts"));
    const auto& focal = corpus.method("Branchy", "flat");
    PromptBudget budget;
    auto p1 = build_seed_prompt(focal, corpus.cls("Branchy"), {}, templates, budget);
    auto p2 = build_seed_prompt(focal, corpus.cls("Branchy"), {}, templates, budget);
    CHECK(p1 == p2);
    CHECK(strings::contains(p1, focal.signature));
    bool instructs_no_assertions = strings::contains(p1, "without assertions") ||
                                   strings::contains(p1, "Do not write any assertion");
    CHECK(instructs_no_assertions);
}

TEST_CASE("seed prompt: over budget drops trailing exemplars, never the focal body") {
    auto corpus = load_corpus();
    auto templates = prompts::TemplateSet::load(kResourceRoot + std::string("/prompts"));
    const auto& focal = corpus.method("TextKit", "capitalize");

    std::vector<ExemplarSnippet> exemplars(5);
    for (std::size_t i = 0; i < exemplars.size(); ++i) {
        exemplars[i].code = "TextKit k = new TextKit(\"x\");\nk.capitalize(\"pad" +
                            std::string(400, 'x') + std::to_string(i) + "\");\n";
        exemplars[i].provenance_method = "ex" + std::to_string(i);
    }
    PromptBudget tight{400};
    auto p = build_seed_prompt(focal, corpus.cls("TextKit"), exemplars, templates, tight);
    CHECK(strings::contains(p, focal.signature));
    CHECK_FALSE(strings::contains(p, "ex4"));  // trailing exemplar went first
    CHECK(strings::approx_tokens(p) <= 400);

    PromptBudget impossible{10};
    CHECK_THROWS_AS(
        build_seed_prompt(focal, corpus.cls("TextKit"), exemplars, templates, impossible),
        PromptOverflow);
}

// ---- refine loop ------------------------------------------------------------

namespace {

struct RefineHarness {
    Corpus corpus = load_corpus();
    prompts::TemplateSet templates =
        prompts::TemplateSet::load(kResourceRoot + std::string("/prompts"));
    toolchain::StubToolchain stub_toolchain;
    stdfs::path workspace;

    RefineHarness() {
        workspace = stdfs::temp_directory_path() / "jtgen_refine_test";
        stdfs::remove_all(workspace);
        stdfs::create_directories(workspace);
    }

    RefineDeps deps(gateway::Gateway& gw) {
        RefineDeps d;
        d.gateway = &gw;
        d.toolchain = &stub_toolchain;
        d.templates = &templates;
        d.workspace = workspace;
        d.classpath = "";
        d.model_id = "stub";
        d.max_rounds = 5;
        return d;
    }
};

std::string good_prefix_code() {
    return "package com.fixture;\n\nimport org.junit.Test;\n\n"
           "public class TextKit_capitalize_SeedTest {\n"
           "    @Test\n"
           "    public void invokesFocal() {\n"
           "        TextKit kit = new TextKit(\"-\");\n"
           "        String out = kit.capitalize(\"word\");\n"
           "        // TODO: assert here\n"
           "    }\n"
           "}\n";
}

std::string broken_prefix_code() {
    return "public class TextKit_capitalize_SeedTest {\n"
           "    // STUB:NOCOMPILE\n"
           "    public void invokesFocal() {\n"
           "        TextKit kit = new TextKit(\"-\");\n"
           "        kit.capitalize(\"word\");\n"
           "    }\n"
           "}\n";
}

}  // namespace

TEST_CASE("refine: immediately compiling candidate passes with zero repair calls") {
    RefineHarness h;
    gateway::StubGateway gw;
    auto deps = h.deps(gw);
    const auto& focal = h.corpus.method("TextKit", "capitalize");
    auto prefix = refine_seed(good_prefix_code(), focal, h.corpus.cls("TextKit"), deps);
    CHECK(prefix.compile_status == CompileStatus::Passed);
    CHECK(prefix.repair_rounds_used == 0);
    CHECK(prefix.todo_marker_count >= 1);
    CHECK(gw.call_count() == 0);
}

TEST_CASE("refine: scripted gateway fixes on round 3") {
    RefineHarness h;
    gateway::StubGateway gw;
    gw.set_responder([&](const gateway::CompletionRequest&, std::size_t index) {
        // repair calls 1 and 2 stay broken; call 3 compiles
        std::string content = index < 2 ? broken_prefix_code() : good_prefix_code();
        return gateway::CompletionResponse{content, gateway::FinishReason::Stop, 1, 1};
    });
    auto deps = h.deps(gw);
    const auto& focal = h.corpus.method("TextKit", "capitalize");
    auto prefix = refine_seed(broken_prefix_code(), focal, h.corpus.cls("TextKit"), deps);
    CHECK(prefix.compile_status == CompileStatus::Passed);
    CHECK(prefix.repair_rounds_used == 3);
    CHECK(gw.call_count() == 3);
}

TEST_CASE("refine: always-broken gateway exhausts exactly five repair calls") {
    RefineHarness h;
    gateway::StubGateway gw(
        {{broken_prefix_code(), gateway::FinishReason::Stop, 1, 1}});
    auto deps = h.deps(gw);
    const auto& focal = h.corpus.method("TextKit", "capitalize");
    auto prefix = refine_seed(broken_prefix_code(), focal, h.corpus.cls("TextKit"), deps);
    CHECK(prefix.compile_status == CompileStatus::Failed);
    CHECK(prefix.repair_rounds_used == 5);
    CHECK(gw.call_count() == 5);
}

TEST_CASE("refine: a prefix that stops invoking the focal is repaired via the loop") {
    RefineHarness h;
    gateway::StubGateway gw({{good_prefix_code(), gateway::FinishReason::Stop, 1, 1}});
    auto deps = h.deps(gw);
    const auto& focal = h.corpus.method("TextKit", "capitalize");
    std::string no_focal =
        "public class TextKit_capitalize_SeedTest { public void empty() { int x = 1; } }\n";
    auto prefix = refine_seed(no_focal, focal, h.corpus.cls("TextKit"), deps);
    CHECK(prefix.compile_status == CompileStatus::Passed);
    CHECK(prefix.repair_rounds_used == 1);
}

TEST_CASE("prepare: marker injected after the last focal call when missing") {
    auto corpus = load_corpus();
    const auto& focal = corpus.method("TextKit", "capitalize");
    std::string candidate =
        "public class T {\n"
        "    public void t() {\n"
        "        TextKit kit = new TextKit(\"-\");\n"
        "        String out = kit.capitalize(\"w\");\n"
        "    }\n"
        "}\n";
    auto prepared = prepare_prefix_candidate(candidate, focal);
    CHECK(prepared.invokes_focal);
    CHECK(prepared.marker_count == 1);
    auto pos_call = prepared.code.find("capitalize");
    auto pos_marker = prepared.code.find(kAssertMarker);
    REQUIRE(pos_marker != std::string::npos);
    CHECK(pos_marker > pos_call);
}

// ---- scaffolding ingestion ----------------------------------------------------

TEST_CASE("evosuite ingestion: scaffolding stripped, tests parsed with invocations") {
    auto tests = load_evosuite_fixture();
    REQUIRE(tests.size() == 1);
    const auto& tc = tests[0];
    CHECK(tc.cls.name == "TextKit_ESTest");
    CHECK(tc.test_methods.size() == 8);
    CHECK_FALSE(strings::contains(tc.cls.content, "EvoRunner"));
    CHECK_FALSE(strings::contains(tc.cls.content, "_scaffolding"));
    for (const auto& m : tc.test_methods) CHECK_FALSE(m.invocations.empty());
}

TEST_CASE("evosuite: missing jar raises ToolMissing before any subprocess") {
    auto corpus = load_corpus();
    EvoSuiteConfig cfg;
    cfg.jar = "/nonexistent/evosuite.jar";
    CHECK_THROWS_AS(run_evosuite(corpus.cls("TextKit"), cfg), ToolMissing);
}
