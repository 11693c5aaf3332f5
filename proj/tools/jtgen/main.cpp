#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include "config.hpp"
#include "jtgen/code_model/parser.hpp"
#include "jtgen/code_model/project_scan.hpp"
#include "jtgen/complexity/complexity.hpp"
#include "jtgen/gateway/http_backend.hpp"
#include "jtgen/gateway/transcript.hpp"
#include "jtgen/pipeline/aggregate.hpp"
#include "jtgen/pipeline/records.hpp"
#include "jtgen/pipeline/session.hpp"
#include "jtgen/seed/evosuite.hpp"
#include "jtgen/seed/refine.hpp"
#include "jtgen/seed/seed_prompt.hpp"
#include "jtgen/steer/intentions.hpp"
#include "jtgen/steer/steer_prompt.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/glob.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/toolchain/javac.hpp"
#include "jtgen/toolchain/stub.hpp"

namespace jtgen::cli {
namespace {

namespace stdfs = std::filesystem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kToolchainMissing = 3;
constexpr int kGatewayUnreachable = 4;
constexpr int kZeroWork = 5;

struct FocalEntry {
    const code_model::SourceClass* cls;
    const code_model::MethodInfo* method;
    int ordinal;  // disambiguates overloads sharing a test class name
};

struct LoadedCorpus {
    std::vector<code_model::SourceClass> classes;
    std::vector<code_model::ScanDiagnostic> diagnostics;
};

LoadedCorpus load_corpus(const RunConfig& cfg) {
    auto scanned = code_model::scan_project(cfg.project_root, cfg.exclude);
    for (const auto& d : scanned.diagnostics) {
        std::cerr << "warning: skipped unparseable file " << d.path << ": " << d.message
                  << "\n";
    }
    return LoadedCorpus{std::move(scanned.classes), std::move(scanned.diagnostics)};
}

bool matches_filter(const std::string& filter, const code_model::SourceClass& cls,
                    const code_model::MethodInfo& m) {
    if (filter.empty()) return true;
    std::string short_name = cls.name + "#" + m.name;
    return glob::matches(filter, short_name) || glob::matches(filter, m.signature) ||
           glob::matches(filter, cls.name);
}

std::vector<FocalEntry> enumerate_focals(const std::vector<code_model::SourceClass>& corpus,
                                         const std::string& filter) {
    std::vector<FocalEntry> out;
    std::map<std::string, int> seen;
    for (const auto& cls : corpus) {
        auto part = code_model::partition_methods(cls);
        for (const auto& m : part.focal) {
            if (!matches_filter(filter, cls, m)) continue;
            // pointer into the corpus vector, which outlives the entries
            const code_model::MethodInfo* stored = nullptr;
            for (const auto& mm : cls.methods) {
                if (mm.signature == m.signature) stored = &mm;
            }
            std::string base = cls.name + "_" + m.name;
            int ordinal = seen[base]++;
            out.push_back(FocalEntry{&cls, stored, ordinal});
        }
    }
    return out;
}

std::map<std::string, std::string> build_known_imports(
    const std::vector<code_model::SourceClass>& corpus) {
    std::map<std::string, std::string> out;
    for (const auto& cls : corpus) {
        if (!cls.is_top_level || cls.package_name.empty()) continue;
        out.emplace(cls.name, cls.package_name + "." + cls.name);
    }
    return out;
}

std::shared_ptr<gateway::Gateway> build_gateway(const RunConfig& cfg) {
    const auto& b = cfg.backend;
    if (b.kind == "replay") {
        if (b.transcript.empty() || !stdfs::exists(b.transcript)) {
            throw gateway::TransportError("replay transcript not found: " +
                                          b.transcript.string());
        }
        return std::make_shared<gateway::ReplayGateway>(
            gateway::Transcript::load(b.transcript));
    }
    if (b.kind == "live") {
        if (b.base_url.empty()) {
            throw gateway::TransportError("live backend requires backend.base_url");
        }
        gateway::HttpBackendConfig hc;
        hc.base_url = b.base_url;
        hc.api_key_env = b.api_key_env;
        auto live = std::make_shared<gateway::HttpGateway>(hc);
        if (!b.record_to.empty()) {
            return std::make_shared<gateway::RecordingGateway>(
                live, gateway::Transcript::Metadata{b.model, "", ""}, b.record_to);
        }
        return live;
    }
    if (b.kind == "stub") {
        auto stub = std::make_shared<gateway::StubGateway>();
        stub->set_responder([](const gateway::CompletionRequest&, std::size_t) {
            return gateway::CompletionResponse{"// stub backend response\n",
                                               gateway::FinishReason::Stop, 0, 0};
        });
        return stub;
    }
    throw ConfigError("unknown backend kind: " + b.kind);
}

std::unique_ptr<toolchain::Toolchain> build_toolchain(const RunConfig& cfg) {
    if (cfg.toolchain.kind == "stub") return std::make_unique<toolchain::StubToolchain>();
    if (cfg.toolchain.kind != "javac") {
        throw ConfigError("unknown toolchain kind: " + cfg.toolchain.kind);
    }
    toolchain::JavacConfig jc;
    jc.jdk_home = cfg.toolchain.jdk_home;
    jc.junit_jar = cfg.toolchain.junit_jar;
    jc.hamcrest_jar = cfg.toolchain.hamcrest_jar;
    jc.jacoco_agent_jar = cfg.toolchain.jacoco_agent_jar;
    jc.jacoco_cli_jar = cfg.toolchain.jacoco_cli_jar;
    jc.runner_dir = cfg.toolchain.runner_dir;
    jc.compile_timeout_s = cfg.toolchain.compile_timeout_s;
    jc.run_timeout_s = cfg.toolchain.run_timeout_s;
    if (!toolchain::JavacToolchain::available(jc)) {
        throw toolchain::ToolchainMissing(
            "no JDK found (set toolchain.jdk_home or put javac on PATH), or select the stub "
            "toolchain");
    }
    return std::make_unique<toolchain::JavacToolchain>(jc);
}

std::vector<seed::EvoSuiteTestClass> load_evosuite_tests(const RunConfig& cfg) {
    if (cfg.evosuite_tests_dir.empty() || !stdfs::exists(cfg.evosuite_tests_dir)) return {};
    return seed::ingest_generated_tests(cfg.evosuite_tests_dir);
}

prompts::TemplateSet load_templates(const RunConfig& cfg) {
    if (cfg.templates_dir.empty()) {
        throw ConfigError("config must set templates_dir (the shipped defaults live in "
                          "resources/prompts)");
    }
    return prompts::TemplateSet::load(cfg.templates_dir);
}

// ---- analyze ----------------------------------------------------------------

struct ContextRow {
    std::string origin;
    complexity::InitFeatures features;
    complexity::ComplexityScore score;
};

struct MethodRow {
    std::string signature;
    int ccn = 0;
    std::vector<ContextRow> contexts;
    double mean_raw = 0.0;
    double mean_scaled = 0.0;
    int mean_bin = 0;
};

int cmd_analyze(const RunConfig& cfg) {
    auto corpus = load_corpus(cfg);
    auto evo_tests = load_evosuite_tests(cfg);
    auto focals = enumerate_focals(corpus.classes, "");

    // pass 1: gather every invocation context
    struct Pending {
        std::string signature;
        std::string origin;
        complexity::InitFeatures features;
    };
    std::vector<Pending> pending;
    std::vector<MethodRow> rows;
    std::vector<complexity::InitFeatures> all_features;

    for (const auto& entry : focals) {
        MethodRow row;
        row.signature = entry.method->signature;
        row.ccn = complexity::cyclomatic_complexity(*entry.method);
        rows.push_back(row);

        auto source_ex = seed::mine_source_exemplars(*entry.cls, corpus.classes, *entry.method);
        auto evo_ex = seed::mine_evosuite_exemplars(evo_tests, *entry.method,
                                                    source_ex.empty() ? 5 : 3);
        auto measure = [&](const seed::ExemplarSnippet& snip, const char* origin) {
            try {
                auto features = complexity::count_init_features(snip.code, *entry.method);
                pending.push_back({entry.method->signature, origin, features});
                all_features.push_back(features);
            } catch (const complexity::NoFocalCall&) {
                // a snippet that lost its call carries no signal
            }
        };
        for (const auto& s : source_ex) measure(s, "source");
        for (const auto& s : evo_ex) measure(s, "evosuite");
    }

    complexity::NormalizationStats stats;
    if (!all_features.empty()) stats = complexity::fit_normalization(all_features);

    std::map<std::string, MethodRow*> by_signature;
    for (auto& r : rows) by_signature[r.signature] = &r;
    for (const auto& p : pending) {
        ContextRow ctx;
        ctx.origin = p.origin;
        ctx.features = p.features;
        ctx.score = complexity::init_complexity(p.features, stats, cfg.weights);
        by_signature[p.signature]->contexts.push_back(ctx);
    }
    for (auto& r : rows) {
        if (r.contexts.empty()) continue;
        double sum_raw = 0;
        for (const auto& c : r.contexts) sum_raw += c.score.raw;
        r.mean_raw = sum_raw / r.contexts.size();
        r.mean_scaled = 10.0 * r.mean_raw;
        r.mean_bin = std::min(static_cast<int>(r.mean_scaled), 9);
    }

    // JSON report
    json j;
    j["weights"] = {cfg.weights.w_var, cfg.weights.w_creation, cfg.weights.w_calls,
                    cfg.weights.w_params};
    j["stats"] = {
        {"var_decls", {{"min", stats.var_decls.min}, {"max", stats.var_decls.max}}},
        {"creations", {{"min", stats.creations.min}, {"max", stats.creations.max}}},
        {"calls_before_focal",
         {{"min", stats.calls_before_focal.min}, {"max", stats.calls_before_focal.max}}},
        {"params", {{"min", stats.params.min}, {"max", stats.params.max}}},
    };
    j["groupings"] = {{"per_context", "one row per invocation context"},
                      {"per_focal", "mean over a method's contexts"}};
    json methods = json::array();
    for (const auto& r : rows) {
        json contexts = json::array();
        for (const auto& c : r.contexts) {
            contexts.push_back({{"origin", c.origin},
                                {"var_decls", c.features.var_decls},
                                {"creations", c.features.creations},
                                {"calls_before_focal", c.features.calls_before_focal},
                                {"params", c.features.params},
                                {"raw", c.score.raw},
                                {"scaled", c.score.scaled},
                                {"bin", c.score.bin}});
        }
        json m{{"signature", r.signature}, {"ccn", r.ccn}, {"contexts", contexts}};
        if (!r.contexts.empty()) {
            m["mean_raw"] = r.mean_raw;
            m["mean_scaled"] = r.mean_scaled;
            m["mean_bin"] = r.mean_bin;
        }
        methods.push_back(m);
    }
    j["methods"] = methods;

    // CSV report: one row per context, plus context-free methods with CCN only
    std::string csv =
        "signature,origin,var_decls,creations,calls_before_focal,params,raw,scaled,bin,ccn\n";
    for (const auto& r : rows) {
        if (r.contexts.empty()) {
            csv += r.signature + ",,,,,,,,," + std::to_string(r.ccn) + "\n";
            continue;
        }
        for (const auto& c : r.contexts) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f,%.4f,%d", c.score.raw, c.score.scaled,
                          c.score.bin);
            csv += r.signature + "," + c.origin + "," + std::to_string(c.features.var_decls) +
                   "," + std::to_string(c.features.creations) + "," +
                   std::to_string(c.features.calls_before_focal) + "," +
                   std::to_string(c.features.params) + "," + buf + "," +
                   std::to_string(r.ccn) + "\n";
        }
    }

    fs::write_file(cfg.output_root / "complexity_report.json", j.dump(2) + "\n");
    fs::write_file(cfg.output_root / "complexity_report.csv", csv);
    std::cout << "analyzed " << rows.size() << " focal methods ("
              << pending.size() << " invocation contexts) -> "
              << (cfg.output_root / "complexity_report.json").string() << "\n";
    return kOk;
}

// ---- generate ----------------------------------------------------------------

pipeline::Services make_services(const RunConfig& cfg, gateway::Gateway& gw,
                                 toolchain::Toolchain& tc,
                                 const prompts::TemplateSet& templates,
                                 const std::vector<code_model::SourceClass>& corpus,
                                 const std::vector<seed::EvoSuiteTestClass>& evo_tests) {
    pipeline::Services s;
    s.gateway = &gw;
    s.toolchain = &tc;
    s.templates = &templates;
    s.corpus = &corpus;
    s.evosuite_tests = &evo_tests;
    s.workspace_root = cfg.output_root / "work";
    s.output_root = cfg.output_root;
    s.project_classpath = cfg.toolchain.classpath;
    s.known_imports = build_known_imports(corpus);
    s.model_id = cfg.backend.model;
    s.max_completion_tokens = cfg.backend.max_completion_tokens;
    s.prompt_token_budget = cfg.backend.prompt_token_budget;
    s.project_name = cfg.project_name;
    return s;
}

int cmd_generate(const RunConfig& cfg, const std::string& filter, bool dry_run) {
    auto corpus = load_corpus(cfg);
    auto evo_tests = load_evosuite_tests(cfg);
    auto templates = load_templates(cfg);
    auto focals = enumerate_focals(corpus.classes, filter);

    if (focals.empty()) {
        std::cerr << "0 sessions: no focal method matches"
                  << (filter.empty() ? "" : " filter '" + filter + "'") << "\n";
        return kZeroWork;
    }

    if (dry_run) {
        // prompts only, no gateway traffic
        seed::PromptBudget budget{cfg.backend.prompt_token_budget};
        for (const auto& entry : focals) {
            auto source_ex =
                seed::mine_source_exemplars(*entry.cls, corpus.classes, *entry.method);
            std::vector<seed::ExemplarSnippet> exemplars = source_ex;
            auto supplement = seed::mine_evosuite_exemplars(evo_tests, *entry.method,
                                                            source_ex.empty() ? 5 : 3);
            exemplars.insert(exemplars.end(), supplement.begin(), supplement.end());

            std::string seed_prompt = seed::build_seed_prompt(*entry.method, *entry.cls,
                                                              exemplars, templates, budget);
            auto points = steer::extract_branch_points(*entry.method);
            std::vector<steer::BranchIntention> intents;
            for (const auto& p : points) {
                intents.push_back({p, steer::mechanical_fallback_description(p)});
            }
            steer::FunctionIntention func;
            func.purpose = entry.method->signature;
            std::string steer_preview = steer::assemble_fallback_prompt(
                *entry.method, *entry.cls, exemplars, intents, func, templates, budget);

            std::string base = seed::final_test_class_name(*entry.cls, *entry.method);
            if (entry.ordinal > 0) base += "_" + std::to_string(entry.ordinal + 1);
            fs::write_file(cfg.output_root / "prompts" / (base + ".seed.txt"), seed_prompt);
            fs::write_file(cfg.output_root / "prompts" / (base + ".steer.txt"), steer_preview);
        }
        std::cout << "dry run: wrote prompts for " << focals.size() << " focal methods under "
                  << (cfg.output_root / "prompts").string() << "\n";
        return kOk;
    }

    auto gw = build_gateway(cfg);
    auto tc = build_toolchain(cfg);
    auto services = make_services(cfg, *gw, *tc, templates, corpus.classes, evo_tests);

    stdfs::path records_file = cfg.output_root / "records.ndjson";
    std::set<std::string> already_done;
    if (stdfs::exists(records_file)) {
        for (const auto& o : pipeline::load_records(records_file).outcomes) {
            already_done.insert(o.focal_signature);
        }
    }

    std::vector<const FocalEntry*> work;
    for (const auto& f : focals) {
        if (!already_done.count(f.method->signature)) work.push_back(&f);
    }
    if (work.empty()) {
        std::cout << "all " << focals.size()
                  << " matching sessions already recorded; nothing to do\n";
        return kOk;
    }

    std::mutex record_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<int> compiled{0};
    std::atomic<int> passed{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= work.size()) return;
            const FocalEntry& entry = *work[index];
            auto outcome = pipeline::run_focal(*entry.method, *entry.cls, cfg.session,
                                               services, entry.ordinal);
            if (outcome.compiled) ++compiled;
            if (outcome.tests_passed) ++passed;
            std::lock_guard<std::mutex> lock(record_mutex);
            pipeline::append_record(records_file, outcome);
        }
    };

    int workers = std::max(1, std::min<int>(cfg.session.worker_cap,
                                            static_cast<int>(work.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::cout << work.size() << " sessions: " << compiled << " compiled, " << passed
              << " passed -> " << records_file.string() << "\n";
    return kOk;
}

// ---- mine-seeds ----------------------------------------------------------------

int cmd_mine_seeds(const RunConfig& cfg, const std::string& filter) {
    auto corpus = load_corpus(cfg);
    auto evo_tests = load_evosuite_tests(cfg);
    auto templates = load_templates(cfg);
    auto focals = enumerate_focals(corpus.classes, filter);
    if (focals.empty()) {
        std::cerr << "0 sessions: no focal method matches\n";
        return kZeroWork;
    }

    auto gw = build_gateway(cfg);
    auto tc = build_toolchain(cfg);
    seed::PromptBudget budget{cfg.backend.prompt_token_budget};
    auto known = build_known_imports(corpus.classes);

    int passed = 0;
    stdfs::path seeds_records = cfg.output_root / "seed_records.ndjson";
    for (const auto& entry : focals) {
        auto source_ex = seed::mine_source_exemplars(*entry.cls, corpus.classes, *entry.method);
        std::vector<seed::ExemplarSnippet> exemplars = source_ex;
        auto supplement = seed::mine_evosuite_exemplars(evo_tests, *entry.method,
                                                        source_ex.empty() ? 5 : 3);
        exemplars.insert(exemplars.end(), supplement.begin(), supplement.end());

        std::string prompt =
            seed::build_seed_prompt(*entry.method, *entry.cls, exemplars, templates, budget);
        gateway::CompletionRequest req;
        req.messages = {{gateway::Role::User, prompt}};
        req.model_id = cfg.backend.model;
        req.max_tokens = cfg.backend.max_completion_tokens;

        std::string suffix = entry.ordinal > 0 ? "_" + std::to_string(entry.ordinal + 1) : "";
        seed::RefineDeps deps;
        deps.gateway = gw.get();
        deps.toolchain = tc.get();
        deps.templates = &templates;
        deps.fix_context.known_imports = known;
        deps.fix_context.expected_package = entry.cls->package_name;
        deps.workspace = cfg.output_root / "work" /
                         (seed::seed_test_class_name(*entry.cls, *entry.method) + suffix);
        stdfs::create_directories(deps.workspace);
        deps.classpath = cfg.toolchain.classpath;
        deps.model_id = cfg.backend.model;
        deps.max_completion_tokens = cfg.backend.max_completion_tokens;
        deps.max_rounds = cfg.session.max_seed_rounds;

        seed::SeedPrefix prefix;
        std::string error;
        try {
            std::string candidate = gw->complete(req).content;
            prefix = seed::refine_seed(candidate, *entry.method, *entry.cls, deps);
        } catch (const Error& e) {
            error = e.what();
        }

        std::string artifact;
        if (prefix.compile_status == seed::CompileStatus::Passed) {
            artifact = "seeds/" + seed::seed_test_class_name(*entry.cls, *entry.method) +
                       suffix + ".java";
            fs::write_file(cfg.output_root / artifact, prefix.code);
            ++passed;
        }
        json record{{"focal_signature", entry.method->signature},
                    {"compile_status", to_string(prefix.compile_status)},
                    {"repair_rounds_used", prefix.repair_rounds_used},
                    {"todo_marker_count", prefix.todo_marker_count},
                    {"artifact", artifact}};
        if (!error.empty()) record["error"] = error;
        fs::append_line(seeds_records, record.dump());
    }
    std::cout << focals.size() << " focal methods: " << passed
              << " compilable seed prefixes -> " << seeds_records.string() << "\n";
    return kOk;
}

// ---- report ----------------------------------------------------------------

pipeline::ComplexityIndex load_complexity_index(const stdfs::path& path) {
    pipeline::ComplexityIndex index;
    if (path.empty()) return index;
    json j = json::parse(fs::read_file(path));
    for (const auto& m : j.at("methods")) {
        pipeline::ComplexityKey key;
        key.ccn = m.value("ccn", 0);
        if (m.contains("mean_bin")) key.init_bin = m["mean_bin"].get<int>();
        index[m.at("signature").get<std::string>()] = key;
    }
    return index;
}

int cmd_report(const std::vector<std::string>& record_files, const stdfs::path& complexity_file,
               const stdfs::path& out_dir, const std::string& label) {
    std::vector<pipeline::Outcome> outcomes;
    int skipped = 0;
    for (const auto& file : record_files) {
        if (!stdfs::exists(file)) throw ConfigError("record file not found: " + file);
        auto loaded = pipeline::load_records(file);
        skipped += loaded.skipped;
        if (loaded.skipped > 0) {
            std::cerr << "warning: skipped " << loaded.skipped << " malformed record(s) in "
                      << file << "\n";
        }
        outcomes.insert(outcomes.end(), loaded.outcomes.begin(), loaded.outcomes.end());
    }

    auto index = load_complexity_index(complexity_file);
    auto report = pipeline::aggregate(outcomes, index, label);
    report.records_skipped = skipped;

    fs::write_file(out_dir / "aggregate_report.json", pipeline::report_to_json(report));
    fs::write_file(out_dir / "aggregate_report.md", pipeline::report_to_markdown(report));
    fs::write_file(out_dir / "aggregate_report.csv", pipeline::report_to_csv(report));
    std::cout << pipeline::report_to_markdown(report);
    return kOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"batch unit-test generation pipeline for JVM projects"};
    app.require_subcommand(1);

    std::string config_path;
    std::string filter;
    int worker_override = 0;
    std::string backend_override;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file")->required();
        cmd->add_option("--filter", filter, "focal filter glob, e.g. 'TextKit#*'");
        cmd->add_option("--workers", worker_override, "override session.worker_cap");
        cmd->add_option("--backend", backend_override, "override backend.kind");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "complexity report over the corpus");
    analyze->add_option("--config", config_path, "JSON config file")->required();

    CLI::App* mine = app.add_subcommand("mine-seeds", "mine exemplars and refine seed prefixes");
    add_common(mine);

    CLI::App* generate = app.add_subcommand("generate", "run the full pipeline per focal method");
    add_common(generate);
    bool dry_run = false;
    generate->add_flag("--dry-run", dry_run, "write prompts without any gateway call");

    CLI::App* report = app.add_subcommand("report", "aggregate session records");
    std::vector<std::string> record_files;
    std::string complexity_file;
    std::string out_dir = ".";
    std::string label = "run";
    report->add_option("records", record_files, "record files (ndjson)")->required();
    report->add_option("--complexity", complexity_file,
                       "complexity_report.json for binned breakdowns");
    report->add_option("--out", out_dir, "output directory");
    report->add_option("--label", label, "run label for the report rows");

    CLI11_PARSE(app, argc, argv);

    auto load = [&]() {
        RunConfig cfg = load_config(config_path);
        if (worker_override > 0) cfg.session.worker_cap = worker_override;
        if (!backend_override.empty()) cfg.backend.kind = backend_override;
        return cfg;
    };

    if (app.got_subcommand(analyze)) return cmd_analyze(load());
    if (app.got_subcommand(mine)) return cmd_mine_seeds(load(), filter);
    if (app.got_subcommand(generate)) return cmd_generate(load(), filter, dry_run);
    if (app.got_subcommand(report)) return cmd_report(record_files, complexity_file, out_dir, label);
    return kConfigError;
}

}  // namespace
}  // namespace jtgen::cli

int main(int argc, char** argv) {
    using namespace jtgen;
    try {
        return cli::dispatch(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const toolchain::ToolchainMissing& e) {
        std::cerr << "toolchain missing: " << e.what() << "\n";
        return 3;
    } catch (const gateway::GatewayError& e) {
        std::cerr << "gateway unreachable: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
