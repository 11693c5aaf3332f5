#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "jtgen/code_model/parser.hpp"
#include "jtgen/code_model/project_scan.hpp"
#include "jtgen/support/fs.hpp"

using namespace jtgen;
using namespace jtgen::code_model;

namespace {

const std::string kFixtureRoot = JTGEN_FIXTURE_DIR;

SourceClass parse_one(const std::string& source, const std::string& name) {
    auto classes = parse_compilation_unit(source, "mem.java");
    for (auto& c : classes) {
        if (c.name == name) return c;
    }
    REQUIRE_MESSAGE(false, "class not found: " << name);
    return {};
}

const MethodInfo& method_named(const SourceClass& cls, const std::string& name) {
    for (const auto& m : cls.methods) {
        if (m.name == name) return m;
    }
    REQUIRE_MESSAGE(false, "method not found: " << name);
    static MethodInfo dummy;
    return dummy;
}

// Independent declaration counter: strips comments and literals with a
// character-level state machine, then counts class/interface/enum keywords
// that start a declaration (word-bounded, followed by an identifier, not
// preceded by '.' or '@'). Deliberately shares nothing with the lexer.
int count_type_declarations(const std::string& src) {
    std::string clean;
    clean.reserve(src.size());
    enum { Code, Line, Block, Str, Chr } state = Code;
    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        char next = i + 1 < src.size() ? src[i + 1] : '\0';
        switch (state) {
            case Code:
                if (c == '/' && next == '/') {
                    state = Line;
                    ++i;
                } else if (c == '/' && next == '*') {
                    state = Block;
                    ++i;
                } else if (c == '"') {
                    state = Str;
                    clean += ' ';
                } else if (c == '\'') {
                    state = Chr;
                    clean += ' ';
                } else {
                    clean += c;
                }
                break;
            case Line:
                if (c == '\n') {
                    state = Code;
                    clean += '\n';
                }
                break;
            case Block:
                if (c == '*' && next == '/') {
                    state = Code;
                    ++i;
                }
                break;
            case Str:
                if (c == '\\') {
                    ++i;
                } else if (c == '"') {
                    state = Code;
                }
                break;
            case Chr:
                if (c == '\\') {
                    ++i;
                } else if (c == '\'') {
                    state = Code;
                }
                break;
        }
    }

    auto is_word = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    };
    int count = 0;
    for (const char* kw : {"class", "interface", "enum"}) {
        std::string needle = kw;
        std::size_t pos = 0;
        while ((pos = clean.find(needle, pos)) != std::string::npos) {
            bool left_ok = pos == 0 || (!is_word(clean[pos - 1]) && clean[pos - 1] != '.' &&
                                        clean[pos - 1] != '@');
            std::size_t after = pos + needle.size();
            bool right_boundary = after >= clean.size() || !is_word(clean[after]);
            // must be followed by an identifier start
            std::size_t j = after;
            while (j < clean.size() && std::isspace(static_cast<unsigned char>(clean[j]))) ++j;
            bool followed_by_name =
                j < clean.size() &&
                (std::isalpha(static_cast<unsigned char>(clean[j])) || clean[j] == '_');
            if (left_ok && right_boundary && followed_by_name) ++count;
            pos = after;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("parse: one public concrete class with two methods") {
    const std::string src =
        "package p;\n"
        "public class A {\n"
        "  public int one() { return 1; }\n"
        "  public int two() { return 2; }\n"
        "}\n";
    auto classes = parse_compilation_unit(src, "A.java");
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].name == "A");
    CHECK(classes[0].kind == ClassKind::Concrete);
    CHECK(classes[0].is_public);
    CHECK(classes[0].methods.size() == 2);
}

TEST_CASE("parse: interface plus nested static class yields two entries") {
    const std::string src =
        "package p;\n"
        "interface Reader { int read(); }\n"
        "class Holder {\n"
        "  static class Pocket { int size() { return 0; } }\n"
        "}\n";
    auto classes = parse_compilation_unit(src, "mix.java");
    REQUIRE(classes.size() == 3);
    std::set<std::string> kinds;
    for (const auto& c : classes) kinds.insert(to_string(c.kind));
    CHECK(kinds == std::set<std::string>{"interface", "concrete"});
    bool pocket_nested = false;
    for (const auto& c : classes) {
        if (c.name == "Pocket") pocket_nested = !c.is_top_level;
    }
    CHECK(pocket_nested);
}

TEST_CASE("parse: registry fixture matches the independent declaration count") {
    auto src = fs::read_file(kFixtureRoot + std::string("/parse/TypeRegistry.java"));
    auto classes = parse_compilation_unit(src, "TypeRegistry.java");
    CHECK(static_cast<int>(classes.size()) == count_type_declarations(src));
    // anonymous classes never become entries
    for (const auto& c : classes) CHECK_FALSE(c.name.empty());
}

TEST_CASE("parse: class content reproduces the original byte range") {
    auto src = fs::read_file(kFixtureRoot + std::string("/javaproj/src/com/fixture/TextKit.java"));
    auto classes = parse_compilation_unit(src, "TextKit.java");
    REQUIRE(classes.size() == 1);
    const auto& cls = classes[0];
    CHECK(src.substr(cls.content_offset, cls.content.size()) == cls.content);
    // method body text is a verbatim slice as well
    for (const auto& m : cls.methods) {
        if (!m.content.empty()) CHECK(src.find(m.content) != std::string::npos);
    }
}

TEST_CASE("parse: fields, superclass, and kinds from the fixture project") {
    auto corpus = scan_project(kFixtureRoot + std::string("/javaproj/src"), {});
    CHECK(corpus.diagnostics.empty());

    std::map<std::string, const SourceClass*> by_name;
    for (const auto& c : corpus.classes) by_name[c.name] = &c;

    REQUIRE(by_name.count("TextKit"));
    REQUIRE(by_name.count("Geometry"));
    REQUIRE(by_name.count("Color"));
    REQUIRE(by_name.count("Shape"));
    CHECK(by_name["Geometry"]->kind == ClassKind::Abstract);
    CHECK(by_name["Color"]->kind == ClassKind::Enum);
    CHECK(by_name["Shape"]->kind == ClassKind::Interface);
    CHECK(by_name["TextKit"]->fields.size() == 2);
    CHECK(by_name["TextKit"]->package_name == "com.fixture");
}

TEST_CASE("parse: malformed input raises ParseError") {
    CHECK_THROWS_AS(parse_compilation_unit("public class { int x; }", "bad.java"), ParseError);
    CHECK_THROWS_AS(parse_compilation_unit("class A { void f() { ", "bad2.java"), ParseError);
}

TEST_CASE("partition: focal methods are the public methods of public concrete classes") {
    auto corpus = scan_project(kFixtureRoot + std::string("/javaproj/src"), {});
    for (const auto& cls : corpus.classes) {
        auto part = partition_methods(cls);
        CHECK(part.focal.size() + part.other.size() == cls.methods.size());

        if (cls.name == "TextKit") {
            std::set<std::string> focal_names;
            for (const auto& m : part.focal) focal_names.insert(m.name);
            CHECK(focal_names ==
                  std::set<std::string>{"capitalize", "join", "parseOrDefault", "repeat",
                                        "assemble", "operationCount"});
            // constructor and private helper fall to `other`
            for (const auto& m : part.other) {
                CHECK((m.is_constructor || m.name == "pad"));
            }
        }
        if (cls.kind == ClassKind::Abstract || cls.kind == ClassKind::Interface ||
            cls.kind == ClassKind::Enum || !cls.is_top_level) {
            CHECK(part.focal.empty());
        }
    }
}

TEST_CASE("invocations: nested call arguments are recorded before their caller") {
    const std::string src =
        "class A { int go(P a, Q b) { return a.foo(b.bar()); } }";
    auto cls = parse_one(src, "A");
    const auto& m = method_named(cls, "go");
    REQUIRE(m.invocations.size() == 2);
    CHECK(m.invocations[0].callee_name == "bar");
    CHECK(m.invocations[1].callee_name == "foo");
    CHECK(m.invocations[0].receiver_text == "b");
    CHECK(m.invocations[1].receiver_text == "a");
}

TEST_CASE("invocations: empty body yields empty sequence") {
    auto cls = parse_one("class A { void f() {} }", "A");
    CHECK(method_named(cls, "f").invocations.empty());
}

TEST_CASE("invocations: fixture method has exactly seven calls") {
    auto src = fs::read_file(kFixtureRoot + std::string("/javaproj/src/com/fixture/TextKit.java"));
    auto cls = parse_one(src, "TextKit");
    const auto& m = method_named(cls, "assemble");
    // toUpperCase, trim, add, pad, add, size, join — `new ArrayList` is not a call
    CHECK(m.invocations.size() == 7);
    std::multiset<std::string> names;
    for (const auto& r : m.invocations) names.insert(r.callee_name);
    CHECK(names == std::multiset<std::string>{"toUpperCase", "trim", "add", "add", "pad",
                                              "size", "join"});
}

TEST_CASE("invocations: creations and declarations are not calls") {
    const std::string src =
        "class A {\n"
        "  Runnable r() {\n"
        "    Helper h = new Helper(1, 2);\n"
        "    return new Runnable() { public void run() { h.poke(); } };\n"
        "  }\n"
        "}";
    auto cls = parse_one(src, "A");
    const auto& m = method_named(cls, "r");
    REQUIRE(m.invocations.size() == 1);
    CHECK(m.invocations[0].callee_name == "poke");
}

TEST_CASE("invocations: argument count matches top-level argument expressions") {
    const std::string src =
        "class A { void f(B x) { x.m0(); x.m1(1); x.m3(a, g(b, c), \"s,t\"); } }";
    auto cls = parse_one(src, "A");
    const auto& m = method_named(cls, "f");
    std::map<std::string, int> arity;
    for (const auto& r : m.invocations) arity[r.callee_name] = r.arg_count;
    CHECK(arity["m0"] == 0);
    CHECK(arity["m1"] == 1);
    CHECK(arity["m3"] == 3);
    CHECK(arity["g"] == 2);
}

TEST_CASE("invocations: extraction is order-stable on identical text") {
    auto src = fs::read_file(kFixtureRoot + std::string("/javaproj/src/com/fixture/TextKit.java"));
    auto cls = parse_one(src, "TextKit");
    const auto& m = method_named(cls, "assemble");
    auto again = extract_invocations(m);
    REQUIRE(again.size() == m.invocations.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
        CHECK(again[i].callee_name == m.invocations[i].callee_name);
        CHECK(again[i].arg_count == m.invocations[i].arg_count);
    }
}

TEST_CASE("signature: format, overloads, and erasure") {
    const std::string src =
        "package com.x;\n"
        "public class Reader {\n"
        "  public void parse(String s) {}\n"
        "  public void f(int a) {}\n"
        "  public void f(long a) {}\n"
        "  public void g(java.util.List<String> xs, int[] b, String... rest) {}\n"
        "}";
    auto cls = parse_one(src, "Reader");
    CHECK(method_named(cls, "parse").signature == "com.x.Reader#parse(String)");
    std::set<std::string> sigs;
    for (const auto& m : cls.methods) sigs.insert(m.signature);
    CHECK(sigs.count("com.x.Reader#f(int)"));
    CHECK(sigs.count("com.x.Reader#f(long)"));
    CHECK(sigs.count("com.x.Reader#g(List, int[], String[])"));
}

TEST_CASE("signature: unique across the 20-method overload fixture") {
    auto src = fs::read_file(kFixtureRoot + std::string("/javaproj/src/com/fixture/Wide.java"));
    auto cls = parse_one(src, "Wide");
    REQUIRE(cls.methods.size() == 20);
    std::set<std::string> sigs;
    for (const auto& m : cls.methods) sigs.insert(m.signature);
    CHECK(sigs.size() == cls.methods.size());
}

TEST_CASE("signature: nested class names are qualified") {
    auto src = fs::read_file(kFixtureRoot + std::string("/javaproj/src/com/fixture/Outer.java"));
    auto classes = parse_compilation_unit(src, "Outer.java");
    bool found = false;
    for (const auto& c : classes) {
        if (c.name == "Inner") {
            found = true;
            CHECK(method_named(c, "bump").signature == "com.fixture.Outer.Inner#bump(int)");
        }
    }
    CHECK(found);
}

TEST_CASE("scan: exclusion globs drop matching files") {
    auto all = scan_project(kFixtureRoot + std::string("/javaproj/src"), {});
    auto filtered = scan_project(kFixtureRoot + std::string("/javaproj/src"),
                                 {"**/TextKit.java"});
    CHECK(filtered.classes.size() == all.classes.size() - 1);
}
