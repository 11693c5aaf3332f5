#include "jtgen/code_model/parser.hpp"

#include <algorithm>
#include <cassert>

#include "jtgen/java/lexer.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::code_model {

using java::Token;
using java::TokenKind;
using java::TokenStream;

namespace {

const std::set<std::string> kModifierWords = {
    "public",   "private",   "protected", "static",    "final",  "abstract",
    "native",   "synchronized", "transient", "volatile", "strictfp", "default",
};

const std::set<std::string> kPrimitiveWords = {
    "void", "int", "long", "short", "byte", "char", "float", "double", "boolean",
};

bool is_word(const Token& t) {
    return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
           t.kind == TokenKind::Number;
}

SourceLocation loc_of(const Token& t) {
    return SourceLocation{t.line, t.column};
}

// Joins token texts, inserting a space only between two word-like tokens.
std::string render_tokens(const TokenStream& ts, std::size_t first, std::size_t last) {
    std::string out;
    for (std::size_t i = first; i <= last && i < ts.size(); ++i) {
        if (i > first && is_word(ts.at(i)) && is_word(ts.at(i - 1))) out += ' ';
        out += ts.text(i);
    }
    return out;
}

// Index just past the token matching the opener at `i` (which must be one of
// ( [ {, tracked jointly). Returns ts.size() when unbalanced.
std::size_t skip_balanced(const TokenStream& ts, std::size_t i) {
    int depth = 0;
    for (; i < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "(" || t == "[" || t == "{") {
            ++depth;
        } else if (t == ")" || t == "]" || t == "}") {
            --depth;
            if (depth == 0) return i + 1;
        }
    }
    return ts.size();
}

// Index just past a balanced <...> starting at `i`.
std::size_t skip_angles(const TokenStream& ts, std::size_t i) {
    int depth = 0;
    for (; i < ts.size(); ++i) {
        std::string_view t = ts.text(i);
        if (t == "<") {
            ++depth;
        } else if (t == ">") {
            --depth;
            if (depth == 0) return i + 1;
        } else if (t == ";" || t == "{") {
            break;  // malformed; bail out
        }
    }
    return i;
}

// --- invocation extraction -------------------------------------------------

struct RawCall {
    InvocationRecord record;
    std::size_t close_index;  // token index of the call's ')'
};

// True when the identifier at `k` (followed by '(') begins a declaration
// header rather than a call: the previous token reads as a type.
bool looks_like_declaration(const TokenStream& ts, std::size_t k, std::size_t begin) {
    if (k == begin) return true;  // nothing before the name inside this span
    const Token& prev = ts.at(k - 1);
    std::string_view pt = ts.text(k - 1);
    if (prev.kind == TokenKind::Identifier) return true;
    if (prev.kind == TokenKind::Keyword && (kPrimitiveWords.count(std::string(pt)) ||
                                            kModifierWords.count(std::string(pt))))
        return true;
    return pt == ">" || pt == "]";
}

// Walks backward from the '.' before a callee to capture the receiver
// expression text. Returns the first token index of the receiver.
std::size_t receiver_start(const TokenStream& ts, std::size_t dot_index, std::size_t begin) {
    std::size_t cur = dot_index;  // token before '.'
    for (;;) {
        std::string_view t = ts.text(cur);
        if (t == ")" || t == "]") {
            // balance backward
            int depth = 0;
            std::size_t j = cur;
            for (;; --j) {
                std::string_view u = ts.text(j);
                if (u == ")" || u == "]" || u == "}") ++depth;
                if (u == "(" || u == "[" || u == "{") {
                    --depth;
                    if (depth == 0) break;
                }
                if (j == begin) break;
            }
            if (j == begin && depth != 0) return begin;
            cur = j;
            // a call or array access may itself be qualified: `a.b(x).c()`
            if (cur > begin) {
                const Token& p = ts.at(cur - 1);
                std::string_view ptext = ts.text(cur - 1);
                if (p.kind == TokenKind::Identifier || ptext == "this" || ptext == "super") {
                    cur = cur - 1;
                    continue;
                }
            }
            break;
        }
        if (ts.at(cur).kind == TokenKind::Identifier || ts.at(cur).kind == TokenKind::String ||
            ts.at(cur).kind == TokenKind::Number || t == "this" || t == "super" ||
            t == "class") {
            // nothing more to consume for this element
        } else {
            return cur + 1;
        }
        // continue across a '.' chain
        if (cur > begin && ts.text(cur - 1) == ".") {
            if (cur >= 2) {
                cur = cur - 2;
                continue;
            }
        }
        break;
    }
    // include a directly preceding `new`
    if (cur > begin && ts.is_keyword(cur - 1, "new")) return cur - 1;
    return cur;
}

std::vector<RawCall> collect_calls(const TokenStream& ts, std::size_t begin, std::size_t end) {
    std::vector<RawCall> calls;
    for (std::size_t k = begin; k < end; ++k) {
        if (ts.at(k).kind != TokenKind::Identifier) continue;
        if (k + 1 >= end || ts.text(k + 1) != "(") continue;

        bool qualified = k > begin && ts.text(k - 1) == ".";
        if (!qualified && looks_like_declaration(ts, k, begin)) continue;
        if (qualified && k >= 2 && ts.is_keyword(k - 2, "new")) continue;  // qualified new

        // creation expression: `new Foo(` possibly via a dotted chain
        if (!qualified && k > begin && ts.is_keyword(k - 1, "new")) continue;
        if (qualified) {
            // walk back the dotted name: if the chain head is preceded by
            // `new`, this is `new a.b.Foo(...)`
            std::size_t j = k;
            while (j >= begin + 2 && ts.text(j - 1) == "." &&
                   ts.at(j - 2).kind == TokenKind::Identifier) {
                j -= 2;
            }
            if (j > begin && ts.is_keyword(j - 1, "new")) continue;
        }

        InvocationRecord rec;
        rec.callee_name = std::string(ts.text(k));
        rec.location = loc_of(ts.at(k));
        if (qualified) {
            std::size_t rstart = receiver_start(ts, k - 2, begin);
            rec.receiver_text = std::string(ts.slice(rstart, k - 2));
        }

        // count top-level argument expressions
        std::size_t close = k + 1;
        int depth = 0;
        int commas = 0;
        bool any_token = false;
        for (std::size_t j = k + 1; j < end; ++j) {
            std::string_view t = ts.text(j);
            if (t == "(" || t == "[" || t == "{") {
                ++depth;
            } else if (t == ")" || t == "]" || t == "}") {
                --depth;
                if (depth == 0) {
                    close = j;
                    break;
                }
            } else if (depth == 1) {
                if (t == ",")
                    ++commas;
                else
                    any_token = true;
            }
        }
        rec.arg_count = any_token || commas ? commas + 1 : 0;
        calls.push_back(RawCall{std::move(rec), close});
    }
    // completion order: a call finishes when its ')' closes, so nested
    // argument calls come first
    std::stable_sort(calls.begin(), calls.end(),
                     [](const RawCall& a, const RawCall& b) { return a.close_index < b.close_index; });
    return calls;
}

std::vector<InvocationRecord> invocations_in_range(const TokenStream& ts, std::size_t begin,
                                                   std::size_t end) {
    std::vector<InvocationRecord> out;
    for (auto& c : collect_calls(ts, begin, end)) out.push_back(std::move(c.record));
    return out;
}

// --- member/type parsing ----------------------------------------------------

class UnitParser {
public:
    UnitParser(const TokenStream& ts, std::string path) : ts_(ts), path_(std::move(path)) {}

    std::vector<SourceClass> parse() {
        std::size_t i = 0;
        while (i < ts_.size()) {
            if (ts_.is_keyword(i, "package")) {
                std::size_t j = i + 1;
                std::string name;
                while (j < ts_.size() && ts_.text(j) != ";") {
                    name += ts_.text(j);
                    ++j;
                }
                package_ = name;
                i = j + 1;
                continue;
            }
            if (ts_.is_keyword(i, "import")) {
                while (i < ts_.size() && ts_.text(i) != ";") ++i;
                ++i;
                continue;
            }
            std::size_t decl_start = i;
            std::set<std::string> modifiers;
            i = consume_annotations_and_modifiers(i, modifiers);
            if (is_type_keyword(i)) {
                i = parse_type(decl_start, i, modifiers, /*enclosing=*/"");
            } else {
                i = decl_start + 1;  // stray token; skip
            }
        }
        return std::move(classes_);
    }

private:
    bool is_type_keyword(std::size_t i) const {
        return ts_.is_keyword(i, "class") || ts_.is_keyword(i, "interface") ||
               ts_.is_keyword(i, "enum");
    }

    [[noreturn]] void fail(std::size_t i, const std::string& message) const {
        SourceLocation loc =
            i < ts_.size() ? loc_of(ts_.at(i)) : SourceLocation{0, 0};
        throw ParseError(path_, loc, message);
    }

    std::size_t consume_annotations_and_modifiers(std::size_t i, std::set<std::string>& out) {
        for (;;) {
            if (i < ts_.size() && ts_.text(i) == "@") {
                i += 2;  // @ Name
                // dotted annotation names
                while (i + 1 < ts_.size() && ts_.text(i) == "." &&
                       ts_.at(i + 1).kind == TokenKind::Identifier)
                    i += 2;
                if (i < ts_.size() && ts_.text(i) == "(") i = skip_balanced(ts_, i);
                continue;
            }
            if (i < ts_.size() && ts_.at(i).kind == TokenKind::Keyword &&
                kModifierWords.count(std::string(ts_.text(i)))) {
                out.insert(std::string(ts_.text(i)));
                ++i;
                continue;
            }
            return i;
        }
    }

    // `kw` indexes the class/interface/enum keyword; `decl_start` the first
    // annotation or modifier token of the declaration.
    std::size_t parse_type(std::size_t decl_start, std::size_t kw,
                           const std::set<std::string>& modifiers,
                           const std::string& enclosing) {
        std::string_view kind_word = ts_.text(kw);
        std::size_t i = kw + 1;
        if (i >= ts_.size() || ts_.at(i).kind != TokenKind::Identifier)
            fail(kw, "type declaration without a name");

        SourceClass cls;
        cls.name = std::string(ts_.text(i));
        cls.package_name = package_;
        cls.enclosing_name = enclosing;
        cls.is_top_level = enclosing.empty();
        cls.is_public = modifiers.count("public") > 0;
        cls.file_path = path_;
        if (kind_word == "interface")
            cls.kind = ClassKind::Interface;
        else if (kind_word == "enum")
            cls.kind = ClassKind::Enum;
        else
            cls.kind = modifiers.count("abstract") ? ClassKind::Abstract : ClassKind::Concrete;
        ++i;

        if (i < ts_.size() && ts_.text(i) == "<") i = skip_angles(ts_, i);

        while (i < ts_.size() && ts_.text(i) != "{") {
            if (ts_.is_keyword(i, "extends") && cls.kind != ClassKind::Interface) {
                std::size_t j = i + 1;
                std::string super;
                while (j < ts_.size() && (ts_.at(j).kind == TokenKind::Identifier ||
                                          ts_.text(j) == ".")) {
                    super += ts_.text(j);
                    ++j;
                }
                if (j < ts_.size() && ts_.text(j) == "<") j = skip_angles(ts_, j);
                if (!super.empty()) cls.superclass = super;
                i = j;
                continue;
            }
            ++i;
        }
        if (i >= ts_.size()) fail(kw, "type body never opens");

        std::size_t body_open = i;
        std::size_t after = skip_balanced(ts_, body_open);
        if (after == ts_.size() && ts_.text(ts_.size() - 1) != "}")
            fail(body_open, "unbalanced braces in type body");
        std::size_t body_close = after - 1;

        const Token& first = ts_.at(decl_start);
        const Token& last = ts_.at(body_close);
        cls.content_offset = first.offset;
        cls.content = std::string(ts_.slice(decl_start, body_close));

        parse_members(cls, body_open + 1, body_close, kind_word == "enum");

        classes_.push_back(std::move(cls));
        (void)first;
        (void)last;
        return after;
    }

    void parse_members(SourceClass& cls, std::size_t begin, std::size_t end, bool is_enum) {
        std::size_t i = begin;

        if (is_enum) {
            // constant list runs to the first ';' at this depth (or the end)
            while (i < end) {
                std::string_view t = ts_.text(i);
                if (t == ";") {
                    ++i;
                    break;
                }
                if (t == "(" || t == "{" || t == "[") {
                    i = skip_balanced(ts_, i);
                } else {
                    ++i;
                }
            }
        }

        while (i < end) {
            if (ts_.text(i) == ";") {
                ++i;
                continue;
            }

            std::size_t decl_start = i;
            std::set<std::string> modifiers;
            i = consume_annotations_and_modifiers(i, modifiers);

            if (i >= end) break;

            // initializer block
            if (ts_.text(i) == "{") {
                i = skip_balanced(ts_, i);
                continue;
            }

            // nested type
            if (is_type_keyword(i)) {
                i = parse_type(decl_start, i, modifiers, cls.qualified_name());
                continue;
            }

            // generic method type parameters
            if (ts_.text(i) == "<") i = skip_angles(ts_, i);

            // find the structural decision point at this depth
            std::size_t probe = i;
            std::size_t paren = ts_.size();
            std::size_t assign_or_semi = ts_.size();
            int depth = 0;
            for (std::size_t j = i; j < end; ++j) {
                std::string_view t = ts_.text(j);
                if (t == "(" && depth == 0) {
                    paren = j;
                    break;
                }
                if ((t == "=" || t == ";") && depth == 0) {
                    assign_or_semi = j;
                    break;
                }
                if (t == "<") ++depth;
                if (t == ">") depth = depth > 0 ? depth - 1 : 0;
                if (t == "[" ) ++depth;
                if (t == "]") depth = depth > 0 ? depth - 1 : 0;
            }
            (void)probe;

            if (paren < assign_or_semi) {
                i = parse_method(cls, decl_start, i, paren, end, modifiers);
            } else if (assign_or_semi < ts_.size()) {
                i = parse_field(cls, i, assign_or_semi, end, modifiers);
            } else {
                ++i;  // unrecognized member fragment
            }
        }
    }

    std::size_t parse_method(SourceClass& cls, std::size_t decl_start, std::size_t type_start,
                             std::size_t paren, std::size_t end,
                             const std::set<std::string>& modifiers) {
        if (paren == type_start || ts_.at(paren - 1).kind != TokenKind::Identifier) {
            // not a parsable member header; resynchronize past the parens
            return skip_balanced(ts_, paren);
        }
        std::size_t name_index = paren - 1;

        MethodInfo m;
        m.name = std::string(ts_.text(name_index));
        m.modifiers = modifiers;
        m.location = loc_of(ts_.at(decl_start));
        m.is_constructor = name_index == type_start && m.name == cls.name;
        if (!m.is_constructor && name_index > type_start) {
            m.return_type = render_tokens(ts_, type_start, name_index - 1);
        }

        std::size_t params_end = skip_balanced(ts_, paren);  // past ')'
        parse_params(m, paren + 1, params_end - 1);

        // throws clause, then body or ';'
        std::size_t i = params_end;
        while (i < end && ts_.text(i) != "{" && ts_.text(i) != ";") {
            if (ts_.text(i) == "(") {
                i = skip_balanced(ts_, i);  // annotation arguments
            } else {
                ++i;
            }
        }

        std::size_t decl_end;
        if (i < end && ts_.text(i) == "{") {
            std::size_t after = skip_balanced(ts_, i);
            decl_end = after - 1;
            m.content = std::string(ts_.slice(i, decl_end));
            m.invocations = invocations_in_range(ts_, i + 1, decl_end);
            i = after;
        } else {
            decl_end = i < end ? i : end - 1;
            ++i;
        }
        m.source_text = std::string(ts_.slice(decl_start, decl_end));
        cls.methods.push_back(std::move(m));
        return i;
    }

    void parse_params(MethodInfo& m, std::size_t begin, std::size_t end) {
        std::size_t item_start = begin;
        int depth = 0;
        for (std::size_t j = begin; j <= end; ++j) {
            bool at_end = j == end;
            std::string_view t = at_end ? std::string_view(",") : ts_.text(j);
            if (!at_end) {
                if (t == "(" || t == "[" || t == "{" || t == "<") {
                    ++depth;
                    continue;
                }
                if (t == ")" || t == "]" || t == "}" || t == ">") {
                    --depth;
                    continue;
                }
            }
            if (t == "," && depth == 0) {
                if (j > item_start) m.params.push_back(parse_one_param(item_start, j - 1));
                item_start = j + 1;
            }
        }
    }

    Param parse_one_param(std::size_t first, std::size_t last) {
        // strip leading annotations and `final`
        std::set<std::string> ignored;
        first = consume_annotations_and_modifiers(first, ignored);

        // the parameter name is the last identifier (possibly followed by
        // old-style array brackets)
        std::size_t name_index = last;
        while (name_index > first && ts_.at(name_index).kind != TokenKind::Identifier)
            --name_index;

        Param p;
        p.name = std::string(ts_.text(name_index));
        std::string type = name_index > first ? render_tokens(ts_, first, name_index - 1) : "";
        // old-style trailing brackets belong to the type
        for (std::size_t j = name_index + 1; j + 1 <= last; j += 2) {
            if (ts_.text(j) == "[" && ts_.text(j + 1) == "]")
                type += "[]";
            else
                break;
        }
        p.declared_type = type;
        return p;
    }

    std::size_t parse_field(SourceClass& cls, std::size_t type_start, std::size_t stop,
                            std::size_t end, const std::set<std::string>& modifiers) {
        // `stop` indexes '=' or ';'. Declarator names sit between the type
        // and the stop/commas; the shared type ends before the first name.
        std::size_t first_name = stop;
        while (first_name > type_start && ts_.at(first_name - 1).kind == TokenKind::Identifier)
            --first_name;
        if (first_name == stop) {
            // e.g. `int a[] = ...`: name precedes brackets
            std::size_t j = stop;
            while (j > type_start && (ts_.text(j - 1) == "[" || ts_.text(j - 1) == "]")) --j;
            first_name = j > type_start ? j - 1 : type_start;
        } else {
            first_name = stop - 1;
        }

        std::string type = first_name > type_start
                               ? render_tokens(ts_, type_start, first_name - 1)
                               : std::string(ts_.text(type_start));

        auto add_field = [&](std::size_t name_index) {
            FieldDecl f;
            f.name = std::string(ts_.text(name_index));
            f.declared_type = type;
            f.modifiers = modifiers;
            cls.fields.push_back(std::move(f));
        };
        add_field(first_name);

        // walk the declarator list to ';'
        std::size_t i = first_name + 1;
        int depth = 0;
        while (i < end) {
            std::string_view t = ts_.text(i);
            if (t == "(" || t == "[" || t == "{") {
                ++depth;
            } else if (t == ")" || t == "]" || t == "}") {
                --depth;
            } else if (depth == 0 && t == ";") {
                return i + 1;
            } else if (depth == 0 && t == "," && i + 1 < end &&
                       ts_.at(i + 1).kind == TokenKind::Identifier) {
                add_field(i + 1);
            }
            ++i;
        }
        return end;
    }

    const TokenStream& ts_;
    std::string path_;
    std::string package_;
    std::vector<SourceClass> classes_;
};

}  // namespace

std::string to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::Interface: return "interface";
        case ClassKind::Abstract: return "abstract";
        case ClassKind::Concrete: return "concrete";
        case ClassKind::Enum: return "enum";
    }
    return "concrete";
}

std::vector<SourceClass> parse_compilation_unit(const std::string& source,
                                                const std::string& path) {
    TokenStream ts = java::lex(source);
    UnitParser parser(ts, path);
    auto classes = parser.parse();
    for (auto& cls : classes) {
        for (auto& m : cls.methods) m.signature = build_signature(m, cls);
    }
    return classes;
}

MethodPartition partition_methods(const SourceClass& cls) {
    MethodPartition out;
    const bool focal_eligible = cls.is_public && cls.is_top_level &&
                                cls.kind == ClassKind::Concrete;
    for (const auto& m : cls.methods) {
        if (focal_eligible && m.is_public() && !m.is_constructor && !m.is_abstract()) {
            out.focal.push_back(m);
        } else {
            out.other.push_back(m);
        }
    }
    return out;
}

std::vector<InvocationRecord> extract_invocations(const MethodInfo& method) {
    if (method.content.empty()) return {};
    TokenStream ts = java::lex(method.content);
    if (ts.size() < 2) return {};
    // skip the enclosing braces of the body text
    std::size_t begin = ts.text(0) == "{" ? 1 : 0;
    std::size_t end = ts.text(ts.size() - 1) == "}" ? ts.size() - 1 : ts.size();
    return invocations_in_range(ts, begin, end);
}

std::vector<InvocationRecord> extract_invocations_from_text(const std::string& code) {
    TokenStream ts = java::lex(code);
    return invocations_in_range(ts, 0, ts.size());
}

std::string erase_type(const std::string& declared_type) {
    // drop generic arguments
    std::string flat;
    int angle = 0;
    for (char c : declared_type) {
        if (c == '<') {
            ++angle;
        } else if (c == '>') {
            if (angle > 0) --angle;
        } else if (angle == 0) {
            flat += c;
        }
    }
    // varargs become an array
    bool varargs = false;
    if (auto pos = flat.find("..."); pos != std::string::npos) {
        varargs = true;
        flat.erase(pos, 3);
    }
    // split off array brackets, reduce the base to its simple name
    std::string base;
    std::string suffix;
    for (char c : flat) {
        if (c == '[' || c == ']')
            suffix += c;
        else if (!std::isspace(static_cast<unsigned char>(c)))
            base += c;
    }
    if (auto dot = base.rfind('.'); dot != std::string::npos) base = base.substr(dot + 1);
    if (varargs) suffix += "[]";
    return base + suffix;
}

std::string build_signature(const MethodInfo& method, const SourceClass& owner) {
    std::string prefix = owner.package_name.empty() ? "" : owner.package_name + ".";
    std::string params;
    for (std::size_t i = 0; i < method.params.size(); ++i) {
        if (i) params += ", ";
        params += erase_type(method.params[i].declared_type);
    }
    return prefix + owner.qualified_name() + "#" + method.name + "(" + params + ")";
}

}  // namespace jtgen::code_model
