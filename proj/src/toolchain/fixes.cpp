#include "jtgen/toolchain/fixes.hpp"

#include <algorithm>
#include <set>

#include "jtgen/java/lexer.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::toolchain {

using jtgen::java::TokenKind;
using jtgen::java::TokenStream;
namespace strings = jtgen::strings;

namespace {

bool is_fence_line(const std::string& line) {
    return strings::starts_with(strings::trim(line), "```");
}

// Keep the first fenced block that looks like Java; if no fences, pass
// through. Bare fence lines around the whole payload are dropped either way.
std::string strip_code_fences(const std::string& code) {
    if (!strings::contains(code, "```")) return code;
    auto lines = strings::split_lines(code);

    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [open, close)
    std::size_t open = 0;
    bool in_block = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!is_fence_line(lines[i])) continue;
        if (!in_block) {
            open = i + 1;
            in_block = true;
        } else {
            blocks.emplace_back(open, i);
            in_block = false;
        }
    }
    if (in_block) blocks.emplace_back(open, lines.size());

    for (const auto& [b, e] : blocks) {
        std::string body;
        for (std::size_t i = b; i < e; ++i) {
            body += lines[i];
            body += '\n';
        }
        if (strings::contains(body, "class ")) return body;
    }

    // fences without a java block: drop the fence lines themselves
    std::string out;
    for (const auto& line : lines) {
        if (is_fence_line(line)) continue;
        out += line;
        out += '\n';
    }
    return out;
}

std::string fix_package_lines(const std::string& code, const std::string& expected_package) {
    auto lines = strings::split_lines(code);
    std::string out;
    bool seen_package = false;
    for (auto& line : lines) {
        std::string t = strings::trim(line);
        if (strings::starts_with(t, "package ")) {
            if (seen_package) continue;  // duplicated package declaration
            seen_package = true;
            if (!expected_package.empty()) {
                out += "package " + expected_package + ";\n";
                continue;
            }
        }
        out += line;
        out += '\n';
    }
    if (!seen_package && !expected_package.empty()) {
        out = "package " + expected_package + ";\n\n" + out;
    }
    return out;
}

// First top-level type name declared in the file.
std::string declared_class_name(const TokenStream& ts) {
    int depth = 0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "{") ++depth;
        if (t == "}") --depth;
        if (depth == 0 &&
            (ts.is_keyword(i, "class") || ts.is_keyword(i, "interface") ||
             ts.is_keyword(i, "enum")) &&
            ts.at(i + 1).kind == TokenKind::Identifier) {
            return std::string(ts.text(i + 1));
        }
    }
    return {};
}

std::string rename_identifier(const std::string& code, const std::string& from,
                              const std::string& to) {
    TokenStream ts = java::lex(code);
    std::string out;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& tok = ts.at(i);
        if (tok.kind == TokenKind::Identifier && ts.text(i) == from) {
            out.append(code, cursor, tok.offset - cursor);
            out += to;
            cursor = tok.offset + tok.length;
        }
    }
    out.append(code, cursor, std::string::npos);
    return out;
}

const std::set<std::string>& java_lang_names() {
    static const std::set<std::string> names = {
        "String",  "Object",    "Integer",   "Long",     "Short",     "Byte",
        "Double",  "Float",     "Boolean",   "Character", "Math",     "System",
        "Thread",  "Exception", "RuntimeException", "Throwable", "Error",
        "Iterable", "Runnable", "Comparable", "CharSequence", "StringBuilder",
        "StringBuffer", "Number", "Class", "Void",
        "IllegalArgumentException", "IllegalStateException", "NullPointerException",
        "ArithmeticException", "ArrayIndexOutOfBoundsException", "IndexOutOfBoundsException",
        "NumberFormatException", "UnsupportedOperationException", "ClassCastException",
        "AssertionError", "Deprecated", "Override", "SuppressWarnings",
    };
    return names;
}

bool is_assertion_name(std::string_view name) {
    return name == "fail" || strings::starts_with(name, "assert");
}

std::string insert_missing_imports(const std::string& code, const FixContext& ctx) {
    TokenStream ts = java::lex(code);

    std::set<std::string> imported_simple;   // simple names already imported
    bool has_assert_static = false;
    bool has_test_import = false;
    std::set<std::string> declared;  // types declared in this file

    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.is_keyword(i, "import")) {
            std::string stmt;
            std::size_t j = i + 1;
            while (j < ts.size() && ts.text(j) != ";") {
                stmt += ts.text(j);
                ++j;
            }
            if (strings::starts_with(stmt, "staticorg.junit.Assert")) has_assert_static = true;
            if (stmt == "org.junit.Test") has_test_import = true;
            if (auto dot = stmt.rfind('.'); dot != std::string::npos)
                imported_simple.insert(stmt.substr(dot + 1));
            i = j;
        }
        if ((ts.is_keyword(i, "class") || ts.is_keyword(i, "interface") ||
             ts.is_keyword(i, "enum")) &&
            i + 1 < ts.size() && ts.at(i + 1).kind == TokenKind::Identifier) {
            declared.insert(std::string(ts.text(i + 1)));
        }
    }

    std::set<std::string> additions;
    bool uses_assertions = false;
    bool uses_test_annotation = false;

    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.at(i).kind != TokenKind::Identifier) continue;
        std::string name(ts.text(i));
        bool qualified = i > 0 && ts.text(i - 1) == ".";
        if (qualified) continue;
        if (i > 0 && ts.text(i - 1) == "@" && name == "Test") uses_test_annotation = true;
        if (is_assertion_name(name) && i + 1 < ts.size() && ts.text(i + 1) == "(")
            uses_assertions = true;

        if (!std::isupper(static_cast<unsigned char>(name[0]))) continue;
        if (declared.count(name) || imported_simple.count(name)) continue;
        if (java_lang_names().count(name)) continue;
        auto it = ctx.known_imports.find(name);
        if (it != ctx.known_imports.end()) additions.insert("import " + it->second + ";");
    }

    if (uses_assertions && !has_assert_static)
        additions.insert("import static org.junit.Assert.*;");
    if (uses_test_annotation && !has_test_import) additions.insert("import org.junit.Test;");
    if (additions.empty()) return code;

    // insert after the last existing import, else after the package line
    auto lines = strings::split_lines(code);
    std::size_t insert_at = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string t = strings::trim(lines[i]);
        if (strings::starts_with(t, "package ")) insert_at = i + 1;
        if (strings::starts_with(t, "import ")) insert_at = i + 1;
    }
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == insert_at) {
            for (const auto& add : additions) {
                out += add;
                out += '\n';
            }
        }
        out += lines[i];
        out += '\n';
    }
    if (insert_at >= lines.size()) {
        for (const auto& add : additions) {
            out += add;
            out += '\n';
        }
    }
    return out;
}

}  // namespace

std::string apply_lightweight_fixes(const std::string& test_code, const FixContext& ctx) {
    std::string code = strip_code_fences(test_code);
    code = fix_package_lines(code, ctx.expected_package);

    if (!ctx.expected_class_name.empty()) {
        TokenStream ts = java::lex(code);
        std::string declared = declared_class_name(ts);
        if (!declared.empty() && declared != ctx.expected_class_name) {
            code = rename_identifier(code, declared, ctx.expected_class_name);
        }
    }

    code = insert_missing_imports(code, ctx);
    return code;
}

}  // namespace jtgen::toolchain
