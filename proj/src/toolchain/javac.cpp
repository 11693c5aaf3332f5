#include "jtgen/toolchain/javac.hpp"

#include <json.hpp>

#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/support/subprocess.hpp"
#include "jtgen/toolchain/coverage_xml.hpp"

namespace jtgen::toolchain {

namespace stdfs = std::filesystem;
using nlohmann::json;

namespace {

std::string tool_path(const stdfs::path& jdk_home, const char* name) {
    if (!jdk_home.empty()) {
        stdfs::path p = jdk_home / "bin" / name;
        return p.string();
    }
    return subprocess::find_on_path(name);
}

std::string join_classpath(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += ':';
        out += p;
    }
    return out;
}

}  // namespace

std::string to_string(TestOutcome outcome) {
    switch (outcome) {
        case TestOutcome::Passed: return "passed";
        case TestOutcome::AssertionFailure: return "assertion_failure";
        case TestOutcome::RuntimeException: return "runtime_exception";
    }
    return "runtime_exception";
}

std::vector<Diagnostic> parse_javac_output(const std::string& stderr_text) {
    std::vector<Diagnostic> out;
    for (const auto& line : strings::split_lines(stderr_text)) {
        // <path>:<line>: error: <message>   (or warning:)
        std::size_t colon1 = line.find(".java:");
        if (colon1 == std::string::npos) {
            // continuation lines (source echo, caret) extend the last message
            if (!out.empty() && !line.empty() && line.find("error") == std::string::npos) {
                out.back().message += "\n" + line;
            }
            continue;
        }
        std::size_t line_start = colon1 + 6;
        std::size_t colon2 = line.find(':', line_start);
        if (colon2 == std::string::npos) continue;
        Diagnostic d;
        d.file = line.substr(0, colon1 + 5);
        d.line = std::atoi(line.substr(line_start, colon2 - line_start).c_str());
        std::string rest = strings::trim(line.substr(colon2 + 1));
        if (strings::starts_with(rest, "warning:")) {
            d.kind = DiagnosticKind::Warning;
            d.message = strings::trim(rest.substr(8));
        } else if (strings::starts_with(rest, "error:")) {
            d.kind = DiagnosticKind::Error;
            d.message = strings::trim(rest.substr(6));
        } else {
            d.kind = DiagnosticKind::Error;
            d.message = rest;
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               std::size_t max_records, std::size_t max_chars) {
    std::string out;
    std::size_t used = 0;
    for (const auto& d : diagnostics) {
        if (d.kind != DiagnosticKind::Error) continue;
        if (used == max_records) break;
        std::string entry = d.file + ":" + std::to_string(d.line) + ": " + d.message + "\n";
        if (out.size() + entry.size() > max_chars) {
            // keep the file/line header even when the body must be cut
            std::string header = d.file + ":" + std::to_string(d.line) + ":\n";
            if (out.size() + header.size() <= max_chars) out += header;
            break;
        }
        out += entry;
        ++used;
    }
    return out;
}

std::string format_failures(const std::vector<TestFailure>& failures, std::size_t max_records,
                            std::size_t max_chars) {
    std::string out;
    std::size_t used = 0;
    for (const auto& f : failures) {
        if (used == max_records) break;
        std::string entry = f.test_name + ": " + f.exception_type +
                            (f.message.empty() ? "" : ": " + f.message) +
                            (f.first_frame.empty() ? "" : "\n  at " + f.first_frame) + "\n";
        if (out.size() + entry.size() > max_chars) break;
        out += entry;
        ++used;
    }
    return out;
}

JavacToolchain::JavacToolchain(JavacConfig config) : config_(std::move(config)) {}

bool JavacToolchain::available(const JavacConfig& config) {
    return !tool_path(config.jdk_home, "javac").empty() &&
           !tool_path(config.jdk_home, "java").empty();
}

std::string JavacToolchain::javac_path() const {
    std::string p = tool_path(config_.jdk_home, "javac");
    if (p.empty()) throw ToolchainMissing("javac not found (configure the JDK home)");
    return p;
}

std::string JavacToolchain::java_path() const {
    std::string p = tool_path(config_.jdk_home, "java");
    if (p.empty()) throw ToolchainMissing("java not found (configure the JDK home)");
    return p;
}

std::string JavacToolchain::junit_classpath(const stdfs::path& workspace) {
    if (!config_.junit_jar.empty()) {
        return join_classpath({config_.junit_jar.string(), config_.hamcrest_jar.string()});
    }
    // compile the bundled org.junit subset once per workspace
    stdfs::path out = workspace / ".jtgen-junit-classes";
    if (stdfs::exists(out / "org" / "junit" / "Assert.class")) return out.string();
    stdfs::path src = config_.runner_dir / "junitmini";
    if (!stdfs::exists(src)) {
        throw ToolchainMissing("neither a junit jar nor bundled junit sources are available");
    }
    stdfs::create_directories(out);
    subprocess::Command cmd;
    cmd.program = javac_path();
    cmd.args = {"-d", out.string()};
    for (const auto& f : fs::list_files(src, ".java")) cmd.args.push_back(f.string());
    cmd.timeout = std::chrono::seconds(config_.compile_timeout_s);
    auto res = subprocess::run(cmd);
    if (!res.ok()) {
        throw ToolchainMissing("bundled junit subset failed to compile: " + res.stderr_text);
    }
    return out.string();
}

std::string JavacToolchain::runner_classpath(const stdfs::path& workspace) {
    stdfs::path out = workspace / ".jtgen-runner-classes";
    {
        std::lock_guard<std::mutex> lock(support_mutex_);
        if (support_ready_.count(workspace.string())) return out.string();
    }
    stdfs::path runner_src = config_.runner_dir / "JtgenTestRunner.java";
    if (!stdfs::exists(runner_src)) {
        throw ToolchainMissing("test runner source not found at " + runner_src.string());
    }
    stdfs::create_directories(out);
    subprocess::Command cmd;
    cmd.program = javac_path();
    cmd.args = {"-d", out.string(), runner_src.string()};
    cmd.timeout = std::chrono::seconds(config_.compile_timeout_s);
    auto res = subprocess::run(cmd);
    if (!res.ok()) {
        throw ToolchainMissing("test runner failed to compile: " + res.stderr_text);
    }
    std::lock_guard<std::mutex> lock(support_mutex_);
    support_ready_.insert(workspace.string());
    return out.string();
}

CompileResult JavacToolchain::compile(const stdfs::path& test_file, const std::string& classpath,
                                      const stdfs::path& workspace) {
    if (config_.compile_timeout_s <= 0) throw CompileTimeout("compile budget is zero");
    stdfs::path classes = workspace / "classes";
    stdfs::create_directories(classes);

    subprocess::Command cmd;
    cmd.program = javac_path();
    cmd.args = {"-d", classes.string(), "-cp",
                join_classpath({classpath, junit_classpath(workspace), classes.string()}),
                test_file.string()};
    cmd.timeout = std::chrono::seconds(config_.compile_timeout_s);
    auto res = subprocess::run(cmd);
    if (res.timed_out) throw CompileTimeout("javac exceeded " +
                                            std::to_string(config_.compile_timeout_s) + "s");

    CompileResult out;
    out.diagnostics = parse_javac_output(res.stderr_text);
    out.success = res.exit_code == 0;
    if (!out.success && out.error_count() == 0) {
        // nonzero exit without parseable diagnostics still counts as an error
        out.diagnostics.push_back(Diagnostic{test_file.string(), 0,
                                             strings::trim(res.stderr_text),
                                             DiagnosticKind::Error});
    }
    return out;
}

std::string JavacToolchain::run_tests_raw(const std::string& test_class_name,
                                          const std::string& classpath,
                                          const stdfs::path& workspace,
                                          const std::string& agent_arg, TestRunResult& out) {
    if (config_.run_timeout_s <= 0) throw RunTimeout("run budget is zero");
    stdfs::path classes = workspace / "classes";

    subprocess::Command cmd;
    cmd.program = java_path();
    if (!agent_arg.empty()) cmd.args.push_back(agent_arg);
    cmd.args.insert(cmd.args.end(),
                    {"-cp",
                     join_classpath({classes.string(), classpath, junit_classpath(workspace),
                                     runner_classpath(workspace)}),
                     "JtgenTestRunner", test_class_name});
    cmd.timeout = std::chrono::seconds(config_.run_timeout_s);
    auto res = subprocess::run(cmd);
    if (res.timed_out) throw RunTimeout("test run exceeded " +
                                        std::to_string(config_.run_timeout_s) + "s");

    bool any_line = false;
    for (const auto& line : strings::split_lines(res.stdout_text)) {
        if (!strings::starts_with(line, "JTGEN-RESULT ")) continue;
        any_line = true;
        json j = json::parse(line.substr(13));
        std::string name = j.value("test", "");
        std::string outcome = j.value("outcome", "runtime_exception");
        TestOutcome o = outcome == "passed"              ? TestOutcome::Passed
                        : outcome == "assertion_failure" ? TestOutcome::AssertionFailure
                                                         : TestOutcome::RuntimeException;
        out.outcomes[name] = o;
        if (o != TestOutcome::Passed) {
            out.failures.push_back(TestFailure{name, j.value("exception", ""),
                                               j.value("message", ""), j.value("frame", "")});
        }
    }
    if (!any_line && res.exit_code != 0) {
        throw RunnerCrash("test runner crashed (exit " + std::to_string(res.exit_code) +
                          "): " + res.stderr_text.substr(0, 500));
    }
    return res.stderr_text;
}

TestRunResult JavacToolchain::run_tests(const std::string& test_class_name,
                                        const std::string& classpath,
                                        const stdfs::path& workspace) {
    TestRunResult out;
    run_tests_raw(test_class_name, classpath, workspace, "", out);
    return out;
}

CoverageReport JavacToolchain::measure_coverage(const std::string& test_class_name,
                                                const std::string& classpath,
                                                const std::vector<std::string>& focal_signatures,
                                                const stdfs::path& workspace) {
    if (config_.jacoco_agent_jar.empty() || !stdfs::exists(config_.jacoco_agent_jar)) {
        throw AgentMissing("coverage agent jar not configured");
    }
    if (config_.jacoco_cli_jar.empty() || !stdfs::exists(config_.jacoco_cli_jar)) {
        throw AgentMissing("coverage cli jar not configured");
    }

    stdfs::path exec_file = workspace / "coverage.exec";
    std::error_code ec;
    stdfs::remove(exec_file, ec);
    std::string agent = "-javaagent:" + config_.jacoco_agent_jar.string() +
                        "=destfile=" + exec_file.string();
    TestRunResult run;
    run_tests_raw(test_class_name, classpath, workspace, agent, run);

    // report over every directory classpath entry (instrumentable classes)
    stdfs::path xml_file = workspace / "coverage.xml";
    subprocess::Command cmd;
    cmd.program = java_path();
    cmd.args = {"-jar", config_.jacoco_cli_jar.string(), "report", exec_file.string()};
    for (const auto& entry : strings::split(classpath, ':')) {
        if (!entry.empty() && stdfs::is_directory(entry)) {
            cmd.args.push_back("--classfiles");
            cmd.args.push_back(entry);
        }
    }
    cmd.args.insert(cmd.args.end(), {"--xml", xml_file.string()});
    cmd.timeout = std::chrono::seconds(config_.run_timeout_s);
    auto res = subprocess::run(cmd);
    if (!res.ok() || !stdfs::exists(xml_file)) {
        throw MalformedReport("coverage report generation failed: " + res.stderr_text);
    }
    return parse_coverage_xml(fs::read_file(xml_file), focal_signatures);
}

}  // namespace jtgen::toolchain
