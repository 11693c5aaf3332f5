#include "jtgen/seed/exemplars.hpp"

#include <set>

#include "jtgen/java/lexer.hpp"
#include "jtgen/seed/assertions.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::seed {

using java::TokenKind;
using java::TokenStream;

namespace {

struct Statement {
    std::size_t first_token;
    std::size_t last_token;
};

// Flat statement segmentation of a body: spans between ';' (at paren depth
// zero) and braces. Control headers become their own spans, which is fine —
// they never define names the slice needs.
std::vector<Statement> segment_statements(const TokenStream& ts) {
    std::vector<Statement> out;
    std::size_t start = 0;
    int paren = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "(") ++paren;
        if (t == ")") paren = paren > 0 ? paren - 1 : 0;
        bool is_break = (t == ";" && paren == 0) || t == "{" || t == "}";
        if (is_break) {
            if (i > start || (i == start && t == ";")) {
                if (i > start) out.push_back(Statement{start, t == ";" ? i : i - 1});
            }
            start = i + 1;
        }
    }
    if (start < ts.size()) out.push_back(Statement{start, ts.size() - 1});
    return out;
}

bool statement_calls(const TokenStream& ts, const Statement& s, const std::string& name,
                     int arity) {
    for (std::size_t i = s.first_token; i + 1 <= s.last_token; ++i) {
        if (ts.at(i).kind != TokenKind::Identifier || ts.text(i) != name) continue;
        if (ts.text(i + 1) != "(") continue;
        if (i > s.first_token && ts.is_keyword(i - 1, "new")) continue;
        // count top-level commas
        int depth = 0;
        int commas = 0;
        bool any = false;
        for (std::size_t j = i + 1; j <= s.last_token; ++j) {
            std::string_view t = ts.text(j);
            if (t == "(" || t == "[" || t == "{") ++depth;
            else if (t == ")" || t == "]" || t == "}") {
                --depth;
                if (depth == 0) break;
            } else if (depth == 1) {
                if (t == ",") ++commas;
                else any = true;
            }
        }
        int args = any || commas ? commas + 1 : 0;
        if (args == arity) return true;
    }
    return false;
}

std::set<std::string> identifiers_in(const TokenStream& ts, const Statement& s) {
    std::set<std::string> out;
    for (std::size_t i = s.first_token; i <= s.last_token; ++i) {
        if (ts.at(i).kind == TokenKind::Identifier) out.insert(std::string(ts.text(i)));
    }
    return out;
}

// Does this statement declare or assign one of the wanted names?
bool statement_defines(const TokenStream& ts, const Statement& s,
                       const std::set<std::string>& wanted) {
    for (std::size_t i = s.first_token; i <= s.last_token; ++i) {
        if (ts.at(i).kind != TokenKind::Identifier) continue;
        if (!wanted.count(std::string(ts.text(i)))) continue;
        if (i + 1 <= s.last_token) {
            std::string_view next = ts.text(i + 1);
            if (next == "=" || next == ";" || next == ",") return true;
        } else {
            return true;  // declarator at span end
        }
    }
    return false;
}

std::string statement_text(const TokenStream& ts, const Statement& s) {
    std::string raw(ts.slice(s.first_token, s.last_token));
    // re-join with original spacing but strip per-line indentation
    std::vector<std::string> lines;
    for (auto& line : strings::split_lines(raw)) lines.push_back(strings::trim(line));
    std::string joined = strings::join(lines, " ");
    return joined;
}

// When the anchor statement wraps the focal call in an assertion
// (`assertEquals("X", kit.capitalize("x"));`), pull out the bare call with
// its receiver chain so the snippet stays assertion-free.
std::string anchor_call_text(const TokenStream& ts, const Statement& s, const std::string& name,
                             int arity) {
    AssertionNameSet assertion_names;
    if (s.first_token >= ts.size() || ts.at(s.first_token).kind != TokenKind::Identifier ||
        !assertion_names.matches(ts.text(s.first_token))) {
        return {};
    }
    for (std::size_t k = s.first_token; k + 1 <= s.last_token; ++k) {
        if (ts.at(k).kind != TokenKind::Identifier || ts.text(k) != name) continue;
        if (ts.text(k + 1) != "(") continue;
        // verify arity at this site
        int depth = 0;
        int commas = 0;
        bool any = false;
        std::size_t close = k + 1;
        for (std::size_t j = k + 1; j <= s.last_token; ++j) {
            std::string_view t = ts.text(j);
            if (t == "(" || t == "[" || t == "{") ++depth;
            else if (t == ")" || t == "]" || t == "}") {
                --depth;
                if (depth == 0) {
                    close = j;
                    break;
                }
            } else if (depth == 1) {
                if (t == ",") ++commas;
                else any = true;
            }
        }
        if ((any || commas ? commas + 1 : 0) != arity) continue;

        // receiver chain: ident('.'ident)* or `new Type(...)` directly before
        std::size_t start = k;
        while (start >= s.first_token + 2 && ts.text(start - 1) == "." &&
               (ts.at(start - 2).kind == TokenKind::Identifier || ts.text(start - 2) == ")")) {
            if (ts.text(start - 2) == ")") {
                int d = 0;
                std::size_t j = start - 2;
                for (;; --j) {
                    std::string_view t = ts.text(j);
                    if (t == ")") ++d;
                    if (t == "(") {
                        --d;
                        if (d == 0) break;
                    }
                    if (j == s.first_token) break;
                }
                start = j;
                if (start > s.first_token && ts.at(start - 1).kind == TokenKind::Identifier)
                    --start;
                if (start > s.first_token && ts.is_keyword(start - 1, "new")) --start;
                break;
            }
            start -= 2;
        }
        return std::string(ts.slice(start, close)) + ";";
    }
    return {};
}

}  // namespace

std::string slice_invocation_context(const code_model::MethodInfo& caller,
                                     const code_model::MethodInfo& focal) {
    if (caller.content.empty()) return {};
    TokenStream ts = java::lex(caller.content);
    auto statements = segment_statements(ts);
    const int arity = static_cast<int>(focal.params.size());

    std::size_t anchor = statements.size();
    for (std::size_t i = 0; i < statements.size(); ++i) {
        if (statement_calls(ts, statements[i], focal.name, arity)) {
            anchor = i;
            break;
        }
    }
    if (anchor == statements.size()) return {};

    std::set<std::string> needed = identifiers_in(ts, statements[anchor]);
    needed.erase(focal.name);

    std::vector<std::size_t> picked{anchor};
    for (std::size_t k = anchor; k-- > 0;) {
        const auto& s = statements[k];
        // a second focal call must never leak into the snippet
        if (statement_calls(ts, s, focal.name, arity)) continue;
        if (!statement_defines(ts, s, needed)) continue;
        picked.push_back(k);
        for (auto& name : identifiers_in(ts, s)) needed.insert(name);
    }

    std::string out;
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
        std::string text;
        if (*it == anchor) {
            text = anchor_call_text(ts, statements[*it], focal.name, arity);
        }
        if (text.empty()) text = statement_text(ts, statements[*it]);
        if (text.empty()) continue;
        out += text;
        if (!strings::ends_with(text, ";") && !strings::ends_with(text, "}")) out += ";";
        out += '\n';
    }
    return out;
}

std::vector<ExemplarSnippet> mine_source_exemplars(
    const code_model::SourceClass& owner, const std::vector<code_model::SourceClass>& corpus,
    const code_model::MethodInfo& focal) {
    std::vector<ExemplarSnippet> out;
    const int arity = static_cast<int>(focal.params.size());

    auto mine_class = [&](const code_model::SourceClass& cls) {
        for (const auto& m : cls.methods) {
            if (m.signature == focal.signature) continue;
            bool calls_focal = false;
            for (const auto& inv : m.invocations) {
                if (inv.callee_name == focal.name && inv.arg_count == arity) {
                    calls_focal = true;
                    break;
                }
            }
            if (!calls_focal) continue;
            std::string code = slice_invocation_context(m, focal);
            if (code.empty()) continue;
            ExemplarSnippet snip;
            snip.origin = ExemplarOrigin::SourceClass;
            snip.code = std::move(code);
            snip.focal_signature = focal.signature;
            snip.provenance_file = cls.file_path;
            snip.provenance_method = m.name;
            out.push_back(std::move(snip));
        }
    };

    mine_class(owner);
    for (const auto& cls : corpus) {
        if (cls.file_path == owner.file_path && cls.qualified_name() == owner.qualified_name())
            continue;
        mine_class(cls);
    }
    return out;
}

std::vector<ExemplarSnippet> mine_evosuite_exemplars(const std::vector<EvoSuiteTestClass>& tests,
                                                     const code_model::MethodInfo& focal,
                                                     std::size_t cap) {
    std::vector<ExemplarSnippet> out;
    const int arity = static_cast<int>(focal.params.size());
    for (const auto& test : tests) {
        for (const auto& m : test.test_methods) {
            if (out.size() >= cap) return out;
            bool calls_focal = false;
            for (const auto& inv : m.invocations) {
                if (inv.callee_name == focal.name && inv.arg_count == arity) {
                    calls_focal = true;
                    break;
                }
            }
            if (!calls_focal) continue;
            std::string code = slice_invocation_context(m, focal);
            if (code.empty()) continue;
            code = remove_assertion_statements(code);
            ExemplarSnippet snip;
            snip.origin = ExemplarOrigin::EvoSuite;
            snip.code = std::move(code);
            snip.focal_signature = focal.signature;
            snip.provenance_file = test.cls.file_path;
            snip.provenance_method = m.name;
            out.push_back(std::move(snip));
        }
    }
    return out;
}

}  // namespace jtgen::seed
