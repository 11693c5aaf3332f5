#include "jtgen/toolchain/stub.hpp"

#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::toolchain {

StubToolchain::StubToolchain() = default;

CompileResult StubToolchain::compile(const std::filesystem::path& test_file,
                                     const std::string& classpath,
                                     const std::filesystem::path& workspace) {
    (void)classpath;
    std::string source = fs::read_file(test_file);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        ++compile_calls_;
        last_compiled_[workspace.string()] = source;
    }
    CompileResult out;
    if (strings::contains(source, "// STUB:NOCOMPILE")) {
        out.success = false;
        out.diagnostics.push_back(Diagnostic{test_file.string(), 1,
                                             "cannot find symbol: scripted failure",
                                             DiagnosticKind::Error});
    } else {
        out.success = true;
    }
    return out;
}

std::string StubToolchain::last_source(const std::filesystem::path& workspace) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = last_compiled_.find(workspace.string());
    return it == last_compiled_.end() ? std::string() : it->second;
}

TestRunResult StubToolchain::run_tests(const std::string& test_class_name,
                                       const std::string& classpath,
                                       const std::filesystem::path& workspace) {
    (void)test_class_name;
    (void)classpath;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        ++run_calls_;
    }
    std::string source = last_source(workspace);
    TestRunResult out;
    if (strings::contains(source, "// STUB:RUNTIME_FAIL")) {
        out.outcomes["test0"] = TestOutcome::RuntimeException;
        out.failures.push_back(TestFailure{"test0", "java.lang.NullPointerException",
                                           "scripted runtime failure",
                                           "Target.method(Target.java:1)"});
    } else if (strings::contains(source, "// STUB:ASSERT_FAIL")) {
        out.outcomes["test0"] = TestOutcome::AssertionFailure;
        out.failures.push_back(TestFailure{"test0", "java.lang.AssertionError",
                                           "expected:<1> but was:<2>",
                                           "Target_Test.test0(Target_Test.java:9)"});
    } else {
        out.outcomes["test0"] = TestOutcome::Passed;
    }
    return out;
}

CoverageReport StubToolchain::measure_coverage(const std::string& test_class_name,
                                               const std::string& classpath,
                                               const std::vector<std::string>& focal_signatures,
                                               const std::filesystem::path& workspace) {
    (void)test_class_name;
    (void)classpath;
    (void)workspace;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        ++coverage_calls_;
    }
    CoverageReport out;
    for (const auto& sig : focal_signatures) out.by_signature[sig] = scripted_coverage_;
    return out;
}

}  // namespace jtgen::toolchain
