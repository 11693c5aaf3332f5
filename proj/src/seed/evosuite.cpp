#include "jtgen/seed/evosuite.hpp"

#include "jtgen/code_model/parser.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/support/subprocess.hpp"

namespace jtgen::seed {

namespace stdfs = std::filesystem;

namespace {

bool is_test_method(const code_model::MethodInfo& m) {
    // generated tests carry @Test; fall back to the naming convention
    return strings::starts_with(m.name, "test") && !m.is_constructor;
}

bool looks_like_scaffolding_line(const std::string& line) {
    std::string t = strings::trim(line);
    return strings::contains(t, "import org.evosuite") ||
           strings::contains(t, "import org.junit.runner.RunWith") ||
           strings::starts_with(t, "@RunWith") ||
           strings::starts_with(t, "@EvoRunnerParameters") ||
           strings::contains(t, "separateClassLoader");
}

}  // namespace

std::string strip_scaffolding(const std::string& test_source) {
    std::string out;
    for (const auto& line : strings::split_lines(test_source)) {
        if (looks_like_scaffolding_line(line)) continue;
        std::string cleaned = line;
        if (auto pos = cleaned.find("extends "); pos != std::string::npos &&
                                                 strings::contains(cleaned, "_scaffolding")) {
            std::size_t end = cleaned.find('{', pos);
            cleaned.erase(pos, (end == std::string::npos ? cleaned.size() : end) - pos);
        }
        out += cleaned;
        out += '\n';
    }
    return out;
}

std::vector<EvoSuiteTestClass> ingest_generated_tests(const stdfs::path& dir) {
    std::vector<EvoSuiteTestClass> out;
    for (const auto& file : fs::list_files(dir, ".java")) {
        std::string name = file.stem().string();
        if (strings::ends_with(name, "_scaffolding")) continue;
        std::string source = strip_scaffolding(fs::read_file(file));
        std::vector<code_model::SourceClass> classes;
        try {
            classes = code_model::parse_compilation_unit(source, file.string());
        } catch (const code_model::ParseError&) {
            continue;  // a malformed generated file never poisons the batch
        }
        for (auto& cls : classes) {
            EvoSuiteTestClass tc;
            for (const auto& m : cls.methods) {
                if (is_test_method(m)) tc.test_methods.push_back(m);
            }
            tc.cls = std::move(cls);
            if (!tc.test_methods.empty()) out.push_back(std::move(tc));
        }
    }
    return out;
}

std::vector<EvoSuiteTestClass> run_evosuite(const code_model::SourceClass& target,
                                            const EvoSuiteConfig& config) {
    if (config.jar.empty() || !stdfs::exists(config.jar)) {
        throw ToolMissing("generator jar not found at '" + config.jar.string() + "'");
    }
    std::string java = config.jdk8_home.empty()
                           ? subprocess::find_on_path("java")
                           : (config.jdk8_home / "bin" / "java").string();
    if (java.empty() || !stdfs::exists(java)) {
        throw ToolMissing("no java runtime for the generator (configure the JDK 8 home)");
    }

    std::string fqcn = target.package_name.empty()
                           ? target.qualified_name()
                           : target.package_name + "." + target.qualified_name();
    stdfs::create_directories(config.output_dir);

    subprocess::Command cmd;
    cmd.program = java;
    cmd.args = {"-jar",       config.jar.string(),
                "-class",     fqcn,
                "-projectCP", config.project_classpath,
                "-Dsearch_budget=" + std::to_string(config.search_budget_s),
                "-Dtest_dir=" + config.output_dir.string(),
                "-Dminimize=true"};
    // generous wall clock on top of the search budget: instrumentation,
    // minimization and writing take their own time
    cmd.timeout = std::chrono::seconds(config.search_budget_s * 3 + 120);

    auto res = subprocess::run(cmd);
    if (res.timed_out) {
        throw GenerationTimeout("generator exceeded its wall clock for " + fqcn);
    }
    if (res.exit_code != 0) {
        std::string excerpt = res.stderr_text.substr(0, 800);
        throw GenerationFailure("generator failed for " + fqcn + ": " + excerpt);
    }
    return ingest_generated_tests(config.output_dir);
}

}  // namespace jtgen::seed
