#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/seed/exemplars.hpp"
#include "jtgen/support/errors.hpp"

namespace jtgen::seed {

class ToolMissing : public Error {
public:
    using Error::Error;
};
class GenerationTimeout : public Error {
public:
    using Error::Error;
};
class GenerationFailure : public Error {
public:
    using Error::Error;
};

struct EvoSuiteConfig {
    std::filesystem::path jar;
    std::filesystem::path jdk8_home;     // the generator requires a Java 8 runtime
    std::string project_classpath;       // compiled bytecode of the project under test
    std::filesystem::path output_dir;
    int search_budget_s = 60;
};

// Invokes the bytecode-based test generator for one target class and parses
// every generated test class it produced. Scaffolding classes and runner
// annotations are stripped before parsing so exemplars stand alone. An
// uninstantiable target (or a fruitless search) yields an empty sequence.
std::vector<EvoSuiteTestClass> run_evosuite(const code_model::SourceClass& target,
                                            const EvoSuiteConfig& config);

// Parses already-generated test sources (e.g. a cached generator output
// directory) into test classes. Shared by run_evosuite and tests.
std::vector<EvoSuiteTestClass> ingest_generated_tests(const std::filesystem::path& dir);

// Removes generator scaffolding: runner annotations, scaffolding imports,
// and the `extends Foo_scaffolding` clause.
std::string strip_scaffolding(const std::string& test_source);

}  // namespace jtgen::seed
