#pragma once

#include <map>
#include <string>

namespace jtgen::toolchain {

struct FixContext {
    // simple name -> fully qualified name, from the project under test
    std::map<std::string, std::string> known_imports;
    // the class name the file is expected to declare (empty = leave alone)
    std::string expected_class_name;
    // package the test should live in (empty = leave alone)
    std::string expected_package;
};

// Deterministic, idempotent cleanup of model output before compilation:
// strips code-fence artifacts, deduplicates package declarations, renames
// the declared test class to the expected file name, and inserts missing
// imports for known project symbols and the JUnit 4 assertion set.
// Unfixable input passes through unchanged.
std::string apply_lightweight_fixes(const std::string& test_code, const FixContext& ctx);

}  // namespace jtgen::toolchain
