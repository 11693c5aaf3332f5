#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/support/errors.hpp"

namespace jtgen::code_model {

class ParseError : public Error {
public:
    ParseError(std::string path, SourceLocation location, const std::string& message)
        : Error(path + ":" + std::to_string(location.line) + ":" +
                std::to_string(location.column) + ": " + message),
          path_(std::move(path)),
          location_(location) {}

    const std::string& path() const { return path_; }
    SourceLocation location() const { return location_; }

private:
    std::string path_;
    SourceLocation location_;
};

// Parses one compilation unit into its class model. Emits one SourceClass
// per top-level and nested type declaration. Throws ParseError on
// unrecoverable syntax failure; no partial results escape.
std::vector<SourceClass> parse_compilation_unit(const std::string& source,
                                                const std::string& path);

// Splits a class's methods into focal candidates and the rest. Focal =
// public named method of a public, top-level, concrete class. Pure.
MethodPartition partition_methods(const SourceClass& cls);

// Re-extracts the call expressions of a method body, ordered by completion
// (nested arguments first), locations relative to the given text.
std::vector<InvocationRecord> extract_invocations(const MethodInfo& method);

// Same extraction over a bare statement sequence (an exemplar snippet or a
// test-method body without surrounding braces).
std::vector<InvocationRecord> extract_invocations_from_text(const std::string& code);

// Canonical signature: `<package>.<Class>#<name>(<erased param types>)`.
// Generic arguments are dropped and qualified types reduced to their simple
// name so signatures line up with coverage-report method identifiers.
std::string build_signature(const MethodInfo& method, const SourceClass& owner);

// Erases one declared parameter type to its canonical form.
std::string erase_type(const std::string& declared_type);

}  // namespace jtgen::code_model
