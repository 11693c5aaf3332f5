#include "jtgen/complexity/complexity.hpp"

#include <algorithm>
#include <cmath>

#include "jtgen/code_model/parser.hpp"
#include "jtgen/java/lexer.hpp"

namespace jtgen::complexity {

using java::TokenKind;
using java::TokenStream;

namespace {

const std::set<std::string_view> kPrimitives = {
    "int", "long", "short", "byte", "char", "float", "double", "boolean",
};

bool is_type_start(const TokenStream& ts, std::size_t i) {
    if (i >= ts.size()) return false;
    if (ts.at(i).kind == TokenKind::Identifier) return true;
    return ts.at(i).kind == TokenKind::Keyword && kPrimitives.count(ts.text(i)) > 0;
}

// Advances past one type: Name(.Name)* <...>? ([])*  or a primitive.
std::size_t skip_type(const TokenStream& ts, std::size_t i, std::size_t end) {
    if (i >= end) return i;
    ++i;
    while (i + 1 < end && ts.text(i) == "." && ts.at(i + 1).kind == TokenKind::Identifier)
        i += 2;
    if (i < end && ts.text(i) == "<") {
        int depth = 0;
        while (i < end) {
            if (ts.text(i) == "<") ++depth;
            if (ts.text(i) == ">") {
                --depth;
                if (depth == 0) {
                    ++i;
                    break;
                }
            }
            if (ts.text(i) == ";") break;
            ++i;
        }
    }
    while (i + 1 < end && ts.text(i) == "[" && ts.text(i + 1) == "]") i += 2;
    return i;
}

// A statement starting at `i` is a local variable declaration when it reads
// [final] Type Name (= | ; | ,).
bool is_declaration_statement(const TokenStream& ts, std::size_t i, std::size_t end) {
    if (i < end && ts.is_keyword(i, "final")) ++i;
    if (!is_type_start(ts, i)) return false;
    std::size_t after_type = skip_type(ts, i, end);
    if (after_type >= end || ts.at(after_type).kind != TokenKind::Identifier) return false;
    std::size_t next = after_type + 1;
    if (next >= end) return false;
    std::string_view t = ts.text(next);
    return t == "=" || t == ";" || t == ",";
}

}  // namespace

bool ComplexityWeights::valid() const {
    if (w_var < 0 || w_creation < 0 || w_calls < 0 || w_params < 0) return false;
    return std::fabs(w_var + w_creation + w_calls + w_params - 1.0) <= 1e-12;
}

InitFeatures count_init_features(const std::string& invocation_context,
                                 const code_model::MethodInfo& focal) {
    auto calls = code_model::extract_invocations_from_text(invocation_context);

    const int focal_arity = static_cast<int>(focal.params.size());
    int focal_line = -1;
    for (const auto& c : calls) {
        if (c.callee_name == focal.name && c.arg_count == focal_arity) {
            focal_line = focal_line < 0 ? c.location.line : std::min(focal_line, c.location.line);
        }
    }
    if (focal_line < 0) throw NoFocalCall(focal.signature.empty() ? focal.name : focal.signature);

    InitFeatures f;
    f.params = focal_arity;

    // calls within the span, excluding calls to the focal itself
    for (const auto& c : calls) {
        if (c.location.line > focal_line) continue;
        if (c.callee_name == focal.name && c.arg_count == focal_arity) continue;
        f.calls_before_focal++;
    }

    TokenStream ts = java::lex(invocation_context);

    // `new` expressions in the span
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.at(i).line > focal_line) break;
        if (ts.is_keyword(i, "new")) f.creations++;
    }

    // declaration statements in the span; statements begin at the context
    // start and after ';', '{' or '}'. A `for (int i = ...` header never
    // triggers: its declaration follows '(' rather than a statement boundary.
    bool at_statement_start = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.at(i).line > focal_line) break;
        std::string_view t = ts.text(i);
        if (at_statement_start && is_declaration_statement(ts, i, ts.size())) {
            f.var_decls++;
        }
        at_statement_start = (t == ";" || t == "{" || t == "}");
    }
    return f;
}

double minmax_normalize(double x, FeatureRange range) {
    if (range.max <= range.min) return 0.0;
    double v = (x - range.min) / (range.max - range.min);
    return std::clamp(v, 0.0, 1.0);
}

ComplexityScore init_complexity(const InitFeatures& f, const NormalizationStats& stats,
                                const ComplexityWeights& w) {
    ComplexityScore score;
    score.raw = w.w_var * minmax_normalize(f.var_decls, stats.var_decls) +
                w.w_creation * minmax_normalize(f.creations, stats.creations) +
                w.w_calls * minmax_normalize(f.calls_before_focal, stats.calls_before_focal) +
                w.w_params * minmax_normalize(f.params, stats.params);
    score.scaled = 10.0 * score.raw;
    score.bin = std::min(static_cast<int>(std::floor(score.scaled)), 9);
    return score;
}

int cyclomatic_complexity_of_text(const std::string& body) {
    TokenStream ts = java::lex(body);
    int decisions = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& tok = ts.at(i);
        std::string_view t = ts.text(i);
        if (tok.kind == TokenKind::Keyword) {
            if (t == "if" || t == "for" || t == "while" || t == "catch" || t == "case")
                ++decisions;
        } else if (tok.kind == TokenKind::Symbol) {
            if (t == "&&" || t == "||" || t == "?") ++decisions;
        }
    }
    return 1 + decisions;
}

int cyclomatic_complexity(const code_model::MethodInfo& method) {
    if (method.content.empty()) return 1;
    return cyclomatic_complexity_of_text(method.content);
}

NormalizationStats fit_normalization(const std::vector<InitFeatures>& corpus) {
    if (corpus.empty()) throw EmptyCorpus();
    auto fit = [](auto get, const std::vector<InitFeatures>& xs) {
        FeatureRange r{static_cast<double>(get(xs.front())), static_cast<double>(get(xs.front()))};
        for (const auto& f : xs) {
            r.min = std::min(r.min, static_cast<double>(get(f)));
            r.max = std::max(r.max, static_cast<double>(get(f)));
        }
        return r;
    };
    NormalizationStats stats;
    stats.var_decls = fit([](const InitFeatures& f) { return f.var_decls; }, corpus);
    stats.creations = fit([](const InitFeatures& f) { return f.creations; }, corpus);
    stats.calls_before_focal =
        fit([](const InitFeatures& f) { return f.calls_before_focal; }, corpus);
    stats.params = fit([](const InitFeatures& f) { return f.params; }, corpus);
    return stats;
}

}  // namespace jtgen::complexity
