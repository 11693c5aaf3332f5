#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"

namespace jtgen::seed {

enum class ExemplarOrigin { SourceClass, EvoSuite };

struct ExemplarSnippet {
    ExemplarOrigin origin = ExemplarOrigin::SourceClass;
    std::string code;             // instantiation + argument prep + the focal call
    std::string focal_signature;
    std::string provenance_file;
    std::string provenance_method;
};

// A parsed test class produced by the bytecode-based generator, scaffolding
// already stripped.
struct EvoSuiteTestClass {
    code_model::SourceClass cls;
    std::vector<code_model::MethodInfo> test_methods;
};

// Path 1: walk every method of the corpus (owning class first); any method
// whose invocation list calls the focal (name + arity) yields one snippet
// built from the name-based backward slice feeding that call.
std::vector<ExemplarSnippet> mine_source_exemplars(
    const code_model::SourceClass& owner,
    const std::vector<code_model::SourceClass>& corpus,
    const code_model::MethodInfo& focal);

// Path 1 supplement (cap 3) / Path 2 fallback (cap 5): convert up to `cap`
// generated test methods invoking the focal into assertion-free snippets,
// selection order = source order.
std::vector<ExemplarSnippet> mine_evosuite_exemplars(
    const std::vector<EvoSuiteTestClass>& tests, const code_model::MethodInfo& focal,
    std::size_t cap);

enum class SeedPath { Path1, Path2 };

inline SeedPath select_path(const std::vector<ExemplarSnippet>& source_exemplars) {
    return source_exemplars.empty() ? SeedPath::Path2 : SeedPath::Path1;
}

// Backward slice over one method body: the focal-call statement plus every
// earlier statement that (transitively) defines a name the call consumes.
// Empty when the body never calls the focal.
std::string slice_invocation_context(const code_model::MethodInfo& caller,
                                     const code_model::MethodInfo& focal);

}  // namespace jtgen::seed
