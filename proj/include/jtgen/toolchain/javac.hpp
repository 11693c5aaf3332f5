#pragma once

#include <filesystem>
#include <mutex>
#include <set>
#include <string>

#include "jtgen/toolchain/toolchain.hpp"

namespace jtgen::toolchain {

struct JavacConfig {
    std::filesystem::path jdk_home;         // empty: resolve javac/java from PATH
    std::filesystem::path junit_jar;        // empty: compile the bundled org.junit subset
    std::filesystem::path hamcrest_jar;     // optional companion of the junit jar
    std::filesystem::path jacoco_agent_jar; // required for live coverage
    std::filesystem::path jacoco_cli_jar;
    std::filesystem::path runner_dir;       // holds JtgenTestRunner.java and junitmini/
    int compile_timeout_s = 60;
    int run_timeout_s = 120;
};

// Adapter over an external JDK: javac for compilation, a bundled
// reflective runner for execution, and the coverage agent + CLI for
// branch/line measurement.
class JavacToolchain : public Toolchain {
public:
    explicit JavacToolchain(JavacConfig config);

    // True when both javac and java binaries resolve.
    static bool available(const JavacConfig& config);

    CompileResult compile(const std::filesystem::path& test_file, const std::string& classpath,
                          const std::filesystem::path& workspace) override;

    TestRunResult run_tests(const std::string& test_class_name, const std::string& classpath,
                            const std::filesystem::path& workspace) override;

    CoverageReport measure_coverage(const std::string& test_class_name,
                                    const std::string& classpath,
                                    const std::vector<std::string>& focal_signatures,
                                    const std::filesystem::path& workspace) override;

    // Classpath entry granting access to org.junit symbols (jar or the
    // compiled bundled subset). Compiles the subset on first use.
    std::string junit_classpath(const std::filesystem::path& workspace);

private:
    std::string javac_path() const;
    std::string java_path() const;
    std::string runner_classpath(const std::filesystem::path& workspace);
    std::string run_tests_raw(const std::string& test_class_name, const std::string& classpath,
                              const std::filesystem::path& workspace,
                              const std::string& agent_arg, TestRunResult& out);

    JavacConfig config_;
    std::mutex support_mutex_;
    std::set<std::string> support_ready_;  // workspaces with compiled runner support
};

// Parses `file:line: error: message` style compiler output.
std::vector<Diagnostic> parse_javac_output(const std::string& stderr_text);

}  // namespace jtgen::toolchain
