#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jtgen::code_model {

enum class ClassKind { Interface, Abstract, Concrete, Enum };

std::string to_string(ClassKind kind);

struct SourceLocation {
    int line = 0;    // 1-based
    int column = 0;  // 1-based

    bool operator==(const SourceLocation&) const = default;
};

struct FieldDecl {
    std::string name;
    std::string declared_type;
    std::set<std::string> modifiers;
};

struct Param {
    std::string name;
    std::string declared_type;
};

struct InvocationRecord {
    std::string callee_name;
    std::string receiver_text;  // empty for implicit receiver
    int arg_count = 0;
    SourceLocation location;
};

struct MethodInfo {
    std::string name;
    std::set<std::string> modifiers;
    std::vector<Param> params;
    std::string return_type;       // empty for constructors
    std::string content;           // body source text, braces included; empty if abstract
    std::string source_text;       // full declaration, modifiers through body
    std::vector<InvocationRecord> invocations;
    std::string signature;         // canonical, see build_signature
    bool is_constructor = false;
    SourceLocation location;

    bool is_public() const { return modifiers.count("public") > 0; }
    bool is_abstract() const { return modifiers.count("abstract") > 0; }
};

struct SourceClass {
    std::string name;
    ClassKind kind = ClassKind::Concrete;
    std::optional<std::string> superclass;
    std::string content;  // byte-exact class declaration text
    std::vector<FieldDecl> fields;
    std::vector<MethodInfo> methods;

    std::string package_name;
    std::string enclosing_name;  // dotted chain for nested classes, empty if top-level
    bool is_public = false;
    bool is_top_level = true;
    std::string file_path;
    std::size_t content_offset = 0;  // byte offset of `content` in the original file

    // Simple name qualified with its enclosing classes, e.g. "Outer.Inner".
    std::string qualified_name() const {
        return enclosing_name.empty() ? name : enclosing_name + "." + name;
    }
};

struct MethodPartition {
    std::vector<MethodInfo> focal;
    std::vector<MethodInfo> other;
};

}  // namespace jtgen::code_model
