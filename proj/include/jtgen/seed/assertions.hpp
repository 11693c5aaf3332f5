#pragma once

#include <string>
#include <vector>

namespace jtgen::seed {

inline constexpr const char* kAssertMarker = "// TODO: assert here";

// Which call statements count as assertions. A statement matches when its
// callee's simple name (after any static qualifier chain) is an exact name
// or carries a listed prefix.
struct AssertionNameSet {
    std::vector<std::string> exact{"fail"};
    std::vector<std::string> prefixes{"assert"};

    bool matches(std::string_view simple_name) const;
};

struct StripResult {
    std::string code;
    int marker_count = 0;
};

// Replaces every top-level assertion call statement with the marker
// comment, one marker per removed statement, at the removed statement's
// position. All other bytes pass through unchanged. Idempotent.
StripResult strip_assertions(const std::string& test_code,
                             const AssertionNameSet& names = {});

// Drops assertion statements outright (exemplar cleanup; no markers).
std::string remove_assertion_statements(const std::string& code,
                                        const AssertionNameSet& names = {});

}  // namespace jtgen::seed
