#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jtgen/code_model/project_scan.hpp"
#include "jtgen/gateway/gateway.hpp"
#include "jtgen/prompts/templates.hpp"
#include "jtgen/seed/assertions.hpp"
#include "jtgen/steer/branch_points.hpp"
#include "jtgen/steer/intentions.hpp"
#include "jtgen/steer/steer_prompt.hpp"
#include "jtgen/support/strings.hpp"

using namespace jtgen;
using namespace jtgen::steer;

namespace {

const std::string kFixtureRoot = JTGEN_FIXTURE_DIR;
const std::string kResourceRoot = JTGEN_RESOURCE_DIR;

struct Fixture {
    std::vector<code_model::SourceClass> classes;
    prompts::TemplateSet templates =
        prompts::TemplateSet::load(kResourceRoot + std::string("/prompts"));

    Fixture() {
        auto scanned = code_model::scan_project(kFixtureRoot + "/javaproj/src", {});
        classes = std::move(scanned.classes);
    }

    const code_model::SourceClass& cls(const std::string& name) const {
        for (const auto& c : classes) {
            if (c.name == name) return c;
        }
        static code_model::SourceClass dummy;
        return dummy;
    }

    const code_model::MethodInfo& method(const std::string& cls_name,
                                         const std::string& m_name) const {
        for (const auto& m : cls(cls_name).methods) {
            if (m.name == m_name) return m;
        }
        static code_model::MethodInfo dummy;
        return dummy;
    }
};

}  // namespace

TEST_CASE("branch points: straight-line body yields none") {
    Fixture fx;
    CHECK(extract_branch_points(fx.method("Branchy", "flat")).empty());
}

TEST_CASE("branch points: compound condition extracted with its text") {
    Fixture fx;
    auto points = extract_branch_points(fx.method("Branchy", "classify"));
    REQUIRE(points.size() == 1);  // the else arm adds no point
    CHECK(points[0].kind == BranchKind::Conditional);
    CHECK(points[0].condition_text == "a > 0 && b == null");
    CHECK(points[0].input_dependent);
}

TEST_CASE("branch points: fixture method has the five hand-verified points") {
    Fixture fx;
    auto points = extract_branch_points(fx.method("Branchy", "process"));
    REQUIRE(points.size() == 5);
    CHECK(points[0].kind == BranchKind::Conditional);  // values == null
    CHECK(points[1].kind == BranchKind::Exception);    // throw
    CHECK(points[2].kind == BranchKind::Loop);         // for (int v : values)
    CHECK(points[3].kind == BranchKind::Conditional);  // v > threshold
    CHECK(points[4].kind == BranchKind::Exception);    // catch
    // ordered by location
    for (std::size_t i = 1; i < points.size(); ++i) {
        CHECK(points[i].location.line >= points[i - 1].location.line);
    }
    CHECK(points[0].input_dependent);       // `values` is a parameter
    CHECK(points[3].input_dependent);       // `threshold` is a parameter
    CHECK_FALSE(points[4].input_dependent); // catch clause references none
}

TEST_CASE("branch points: one point per case label, selector carried") {
    Fixture fx;
    auto points = extract_branch_points(fx.method("Branchy", "pick"));
    REQUIRE(points.size() == 2);  // two case labels, default adds none
    CHECK(points[0].condition_text == "mode == 0");
    CHECK(points[1].condition_text == "mode == 1");
    CHECK(points[0].input_dependent);
}

TEST_CASE("branch points: while loop recorded with condition") {
    Fixture fx;
    auto points = extract_branch_points(fx.method("Branchy", "drain"));
    REQUIRE(points.size() == 1);
    CHECK(points[0].kind == BranchKind::Loop);
    CHECK(points[0].condition_text == "budget > 0");
}

TEST_CASE("branch points: pure function of the body text") {
    Fixture fx;
    auto a = extract_branch_points(fx.method("Branchy", "process"));
    auto b = extract_branch_points(fx.method("Branchy", "process"));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].condition_text == b[i].condition_text);
        CHECK(a[i].location == b[i].location);
    }
}

TEST_CASE("intentions: zero points means zero gateway calls") {
    Fixture fx;
    gateway::StubGateway gw;
    IntentionDeps deps{&gw, &fx.templates, "stub", 512};
    auto intents = infer_branch_intentions({}, fx.method("Branchy", "flat"), deps);
    CHECK(intents.empty());
    CHECK(gw.call_count() == 0);
}

TEST_CASE("intentions: well-formed response maps one description per point") {
    Fixture fx;
    gateway::StubGateway gw({{
        "1. taken when the input array is null\n"
        "2. raised to reject null input\n"
        "3. iterates over every sampled value\n"
        "4. taken when a value exceeds the threshold\n"
        "5. entered when the accumulated total is zero\n",
        gateway::FinishReason::Stop, 1, 1}});
    IntentionDeps deps{&gw, &fx.templates, "stub", 512};
    auto points = extract_branch_points(fx.method("Branchy", "process"));
    auto intents = infer_branch_intentions(points, fx.method("Branchy", "process"), deps);
    REQUIRE(intents.size() == points.size());
    CHECK(intents.size() <= points.size());
    CHECK(intents[0].description == "taken when the input array is null");
    CHECK(intents[3].description == "taken when a value exceeds the threshold");
    CHECK(gw.call_count() == 1);  // batched
}

TEST_CASE("intentions: garbage response falls back mechanically for every point") {
    Fixture fx;
    gateway::StubGateway gw({{"?? not parseable ??", gateway::FinishReason::Stop, 1, 1}});
    IntentionDeps deps{&gw, &fx.templates, "stub", 512};
    auto points = extract_branch_points(fx.method("Branchy", "process"));
    auto intents = infer_branch_intentions(points, fx.method("Branchy", "process"), deps);
    REQUIRE(intents.size() == points.size());
    for (std::size_t i = 0; i < intents.size(); ++i) {
        CHECK(intents[i].description == mechanical_fallback_description(points[i]));
    }
}

TEST_CASE("function intention: fields parsed from the reply, purpose fallback") {
    Fixture fx;
    gateway::StubGateway gw({{
        "purpose: sums the positive samples\n"
        "io: takes an int array, returns an int\n"
        "side_effects: none\n"
        "corner_cases: null array, zero total\n",
        gateway::FinishReason::Stop, 1, 1}});
    IntentionDeps deps{&gw, &fx.templates, "stub", 512};
    auto f = summarize_function_intention(fx.method("Branchy", "process"),
                                          fx.cls("Branchy"), deps);
    CHECK(f.purpose == "sums the positive samples");
    CHECK(f.io_behavior == "takes an int array, returns an int");
    CHECK(f.side_effects == "none");
    CHECK(f.corner_cases == "null array, zero total");

    gateway::StubGateway empty_gw({{"", gateway::FinishReason::Error, 0, 0}});
    IntentionDeps deps2{&empty_gw, &fx.templates, "stub", 512};
    auto fallback = summarize_function_intention(fx.method("Branchy", "process"),
                                                 fx.cls("Branchy"), deps2);
    CHECK(fallback.purpose == fx.method("Branchy", "process").signature);
    CHECK(fallback.io_behavior.empty());
}

TEST_CASE("function intention: deterministic given identical responses") {
    Fixture fx;
    auto run_once = [&]() {
        gateway::StubGateway gw({{"purpose: p\nio: i\nside_effects: s\ncorner_cases: c\n",
                                  gateway::FinishReason::Stop, 1, 1}});
        IntentionDeps deps{&gw, &fx.templates, "stub", 512};
        return summarize_function_intention(fx.method("Branchy", "drain"), fx.cls("Branchy"),
                                            deps);
    };
    auto a = run_once();
    auto b = run_once();
    CHECK(a.purpose == b.purpose);
    CHECK(a.corner_cases == b.corner_cases);
}

TEST_CASE("steer prompt: contains the prefix verbatim and every intention") {
    Fixture fx;
    seed::SeedPrefix prefix;
    prefix.code = "public class T {\n  // TODO: assert here\n}\n";
    prefix.focal_signature = "com.fixture.Branchy#process(int[], int)";
    prefix.todo_marker_count = 1;

    std::vector<BranchIntention> intents;
    BranchPoint p;
    p.condition_text = "values == null";
    intents.push_back({p, "taken when the array is null"});
    FunctionIntention f{"sums positives", "", "", ""};

    auto steer = assemble_steer_prompt(prefix, intents, f, fx.templates, seed::PromptBudget{});
    CHECK(strings::contains(steer.rendered, prefix.code));
    CHECK(strings::contains(steer.rendered, "taken when the array is null"));
    CHECK(strings::contains(steer.rendered, "sums positives"));
    CHECK(strings::contains(steer.rendered, seed::kAssertMarker));
}

TEST_CASE("steer prompt: zero intentions still renders") {
    Fixture fx;
    seed::SeedPrefix prefix;
    prefix.code = "class T {}";
    auto steer = assemble_steer_prompt(prefix, {}, FunctionIntention{"p", "", "", ""},
                                       fx.templates, seed::PromptBudget{});
    CHECK(strings::contains(steer.rendered, "class T {}"));
}

TEST_CASE("steer prompt: over budget drops trailing intentions, prefix intact") {
    Fixture fx;
    seed::SeedPrefix prefix;
    prefix.code = "public class T { void t() { } }";
    std::vector<BranchIntention> intents(30);
    for (std::size_t i = 0; i < intents.size(); ++i) {
        intents[i].description = "intent " + std::to_string(i) + " " + std::string(200, 'x');
    }
    auto steer = assemble_steer_prompt(prefix, intents, FunctionIntention{"p", "", "", ""},
                                       fx.templates, seed::PromptBudget{600});
    CHECK(strings::contains(steer.rendered, prefix.code));
    CHECK(steer.branch_intentions.size() < intents.size());
    CHECK(strings::approx_tokens(steer.rendered) <= 600);

    seed::SeedPrefix huge;
    huge.code = std::string(100000, 'y');
    CHECK_THROWS_AS(assemble_steer_prompt(huge, {}, FunctionIntention{"p", "", "", ""},
                                          fx.templates, seed::PromptBudget{600}),
                    seed::PromptOverflow);
}

TEST_CASE("steer prompt: byte-identical across runs") {
    Fixture fx;
    seed::SeedPrefix prefix;
    prefix.code = "class G { /* prefix */ }";
    std::vector<BranchIntention> intents;
    BranchPoint p;
    p.condition_text = "x > 0";
    intents.push_back({p, "positive path"});
    FunctionIntention f{"p", "i", "s", "c"};
    auto a = assemble_steer_prompt(prefix, intents, f, fx.templates, seed::PromptBudget{});
    auto b = assemble_steer_prompt(prefix, intents, f, fx.templates, seed::PromptBudget{});
    CHECK(a.rendered == b.rendered);
}
