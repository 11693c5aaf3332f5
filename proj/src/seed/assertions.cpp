#include "jtgen/seed/assertions.hpp"

#include <optional>

#include "jtgen/java/lexer.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::seed {

using java::TokenKind;
using java::TokenStream;

namespace {

struct StatementSpan {
    std::size_t begin_offset;  // byte range [begin, end) in the source
    std::size_t end_offset;
};

bool is_statement_boundary(const TokenStream& ts, std::size_t i) {
    std::string_view t = ts.text(i);
    if (t == "{" || t == "}" || t == ";" || t == ":") return true;
    return ts.is_keyword(i, "else") || ts.is_keyword(i, "do") || ts.is_keyword(i, "finally") ||
           ts.is_keyword(i, "try");
}

// Matches an assertion call statement starting at token `i`:
//   [Ident '.']* assertName '(' ... ')' ';'
// Returns the statement's byte span, or nullopt.
std::optional<StatementSpan> match_assertion_statement(const TokenStream& ts, std::size_t i,
                                                       const AssertionNameSet& names) {
    std::size_t start = i;
    // qualifier chain
    while (i + 1 < ts.size() && ts.at(i).kind == TokenKind::Identifier &&
           ts.text(i + 1) == ".") {
        i += 2;
    }
    if (i >= ts.size() || ts.at(i).kind != TokenKind::Identifier) return std::nullopt;
    if (!names.matches(ts.text(i))) return std::nullopt;
    if (i + 1 >= ts.size() || ts.text(i + 1) != "(") return std::nullopt;

    // balanced argument list, then the terminating semicolon
    int depth = 0;
    std::size_t j = i + 1;
    for (; j < ts.size(); ++j) {
        std::string_view t = ts.text(j);
        if (t == "(" || t == "[" || t == "{") ++depth;
        if (t == ")" || t == "]" || t == "}") {
            --depth;
            if (depth == 0) break;
        }
    }
    if (j >= ts.size() || depth != 0) return std::nullopt;
    if (j + 1 >= ts.size() || ts.text(j + 1) != ";") return std::nullopt;

    const auto& first = ts.at(start);
    const auto& last = ts.at(j + 1);
    return StatementSpan{first.offset, last.offset + last.length};
}

std::vector<StatementSpan> find_assertion_statements(const TokenStream& ts,
                                                     const AssertionNameSet& names) {
    std::vector<StatementSpan> spans;
    bool at_start = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (at_start && ts.at(i).kind == TokenKind::Identifier) {
            if (auto span = match_assertion_statement(ts, i, names)) {
                spans.push_back(*span);
                // skip to the end of the matched statement
                while (i + 1 < ts.size() && ts.at(i + 1).offset < span->end_offset) ++i;
                at_start = true;
                continue;
            }
        }
        at_start = is_statement_boundary(ts, i) || ts.text(i) == ")";
    }
    return spans;
}

}  // namespace

bool AssertionNameSet::matches(std::string_view simple_name) const {
    for (const auto& e : exact) {
        if (simple_name == e) return true;
    }
    for (const auto& p : prefixes) {
        if (strings::starts_with(simple_name, p)) return true;
    }
    return false;
}

StripResult strip_assertions(const std::string& test_code, const AssertionNameSet& names) {
    TokenStream ts = java::lex(test_code);
    auto spans = find_assertion_statements(ts, names);

    StripResult out;
    out.marker_count = static_cast<int>(spans.size());
    if (spans.empty()) {
        out.code = test_code;
        return out;
    }
    std::string result;
    result.reserve(test_code.size());
    std::size_t cursor = 0;
    for (const auto& span : spans) {
        result.append(test_code, cursor, span.begin_offset - cursor);
        result += kAssertMarker;
        cursor = span.end_offset;
    }
    result.append(test_code, cursor, std::string::npos);
    out.code = std::move(result);
    return out;
}

std::string remove_assertion_statements(const std::string& code, const AssertionNameSet& names) {
    TokenStream ts = java::lex(code);
    auto spans = find_assertion_statements(ts, names);
    if (spans.empty()) return code;

    std::string result;
    result.reserve(code.size());
    std::size_t cursor = 0;
    for (const auto& span : spans) {
        result.append(code, cursor, span.begin_offset - cursor);
        cursor = span.end_offset;
    }
    result.append(code, cursor, std::string::npos);

    // drop lines the removal left blank
    std::string cleaned;
    for (const auto& line : strings::split_lines(result)) {
        if (strings::trim(line).empty() && !line.empty()) continue;
        cleaned += line;
        cleaned += '\n';
    }
    return cleaned;
}

}  // namespace jtgen::seed
