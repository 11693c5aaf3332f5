#pragma once

#include <map>
#include <mutex>

#include "jtgen/toolchain/toolchain.hpp"

namespace jtgen::toolchain {

// In-memory toolchain for tests. Behavior is driven by markers in the
// compiled source, so a scripted gateway fully controls the session:
//   "// STUB:NOCOMPILE"    -> compilation fails
//   "// STUB:RUNTIME_FAIL" -> one test fails with a runtime exception
//   "// STUB:ASSERT_FAIL"  -> one test fails an assertion
// anything else compiles and passes. Coverage is scripted.
class StubToolchain : public Toolchain {
public:
    StubToolchain();

    CompileResult compile(const std::filesystem::path& test_file, const std::string& classpath,
                          const std::filesystem::path& workspace) override;

    TestRunResult run_tests(const std::string& test_class_name, const std::string& classpath,
                            const std::filesystem::path& workspace) override;

    CoverageReport measure_coverage(const std::string& test_class_name,
                                    const std::string& classpath,
                                    const std::vector<std::string>& focal_signatures,
                                    const std::filesystem::path& workspace) override;

    void set_scripted_coverage(MethodCoverage coverage) { scripted_coverage_ = coverage; }

    int compile_calls() const { return compile_calls_; }
    int run_calls() const { return run_calls_; }
    int coverage_calls() const { return coverage_calls_; }

private:
    std::string last_source(const std::filesystem::path& workspace) const;

    mutable std::mutex mutex_;
    std::map<std::string, std::string> last_compiled_;  // workspace -> source
    MethodCoverage scripted_coverage_{3, 4, 10, 12};
    int compile_calls_ = 0;
    int run_calls_ = 0;
    int coverage_calls_ = 0;
};

}  // namespace jtgen::toolchain
