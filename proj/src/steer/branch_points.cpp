#include "jtgen/steer/branch_points.hpp"

#include <set>

#include "jtgen/java/lexer.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::steer {

using java::TokenKind;
using java::TokenStream;

namespace {

// text of the parenthesized group starting at `open` (which must index '(')
std::string paren_text(const TokenStream& ts, std::size_t open, std::size_t* close_out) {
    int depth = 0;
    for (std::size_t j = open; j < ts.size(); ++j) {
        std::string_view t = ts.text(j);
        if (t == "(") ++depth;
        if (t == ")") {
            --depth;
            if (depth == 0) {
                if (close_out) *close_out = j;
                if (j > open + 1) return std::string(ts.slice(open + 1, j - 1));
                return "";
            }
        }
    }
    if (close_out) *close_out = ts.size();
    return "";
}

bool references_param(const std::string& condition, const std::set<std::string>& params) {
    if (params.empty() || condition.empty()) return false;
    TokenStream ts = java::lex(condition);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts.at(i).kind == TokenKind::Identifier && params.count(std::string(ts.text(i))))
            return true;
    }
    return false;
}

// For a classic for-header, the middle clause is the loop condition; an
// enhanced or clauseless header is reported whole.
std::string for_condition(const std::string& header) {
    TokenStream ts = java::lex(header);
    int depth = 0;
    std::vector<std::size_t> semis;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "(" || t == "[" || t == "{") ++depth;
        if (t == ")" || t == "]" || t == "}") --depth;
        if (t == ";" && depth == 0) semis.push_back(i);
    }
    if (semis.size() == 2 && semis[1] > semis[0] + 1) {
        return std::string(ts.slice(semis[0] + 1, semis[1] - 1));
    }
    return header;
}

}  // namespace

std::string to_string(BranchKind kind) {
    switch (kind) {
        case BranchKind::Conditional: return "conditional";
        case BranchKind::Loop: return "loop";
        case BranchKind::Exception: return "exception";
    }
    return "conditional";
}

std::vector<BranchPoint> extract_branch_points(const code_model::MethodInfo& focal) {
    std::vector<BranchPoint> out;
    if (focal.content.empty()) return out;

    std::set<std::string> params;
    for (const auto& p : focal.params) params.insert(p.name);

    TokenStream ts = java::lex(focal.content);

    // selector text per open switch, keyed by its body's brace depth
    std::vector<std::pair<int, std::string>> switch_stack;
    int brace_depth = 0;

    auto push_point = [&](BranchKind kind, std::string condition, const java::Token& at) {
        BranchPoint p;
        p.kind = kind;
        p.condition_text = std::move(condition);
        p.location = {at.line, at.column};
        p.enclosing_signature = focal.signature;
        p.input_dependent = references_param(p.condition_text, params);
        out.push_back(std::move(p));
    };

    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "{") ++brace_depth;
        if (t == "}") {
            --brace_depth;
            while (!switch_stack.empty() && switch_stack.back().first > brace_depth)
                switch_stack.pop_back();
            continue;
        }
        if (ts.at(i).kind != TokenKind::Keyword) continue;

        if (t == "if") {
            if (i + 1 < ts.size() && ts.text(i + 1) == "(") {
                push_point(BranchKind::Conditional, paren_text(ts, i + 1, nullptr), ts.at(i));
            }
        } else if (t == "while") {
            // covers both while-loops and the condition of a do-while
            if (i + 1 < ts.size() && ts.text(i + 1) == "(") {
                push_point(BranchKind::Loop, paren_text(ts, i + 1, nullptr), ts.at(i));
            }
        } else if (t == "for") {
            if (i + 1 < ts.size() && ts.text(i + 1) == "(") {
                std::string header = paren_text(ts, i + 1, nullptr);
                push_point(BranchKind::Loop, for_condition(header), ts.at(i));
            }
        } else if (t == "switch") {
            if (i + 1 < ts.size() && ts.text(i + 1) == "(") {
                std::size_t close = 0;
                std::string selector = paren_text(ts, i + 1, &close);
                switch_stack.emplace_back(brace_depth + 1, selector);
            }
        } else if (t == "case") {
            std::string label;
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                std::string_view u = ts.text(j);
                if (u == ":") break;
                if (!label.empty()) label += ' ';
                label += u;
            }
            std::string selector = switch_stack.empty() ? "" : switch_stack.back().second;
            std::string condition = selector.empty() ? "case " + label : selector + " == " + label;
            push_point(BranchKind::Conditional, condition, ts.at(i));
        } else if (t == "catch") {
            if (i + 1 < ts.size() && ts.text(i + 1) == "(") {
                push_point(BranchKind::Exception, paren_text(ts, i + 1, nullptr), ts.at(i));
            }
        } else if (t == "throw") {
            std::string expr;
            std::size_t first = i + 1;
            std::size_t last = first;
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                if (ts.text(j) == ";") break;
                last = j;
            }
            if (last >= first && first < ts.size()) expr = std::string(ts.slice(first, last));
            push_point(BranchKind::Exception, expr, ts.at(i));
        }
    }
    return out;
}

}  // namespace jtgen::steer
