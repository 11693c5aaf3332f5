#include "jtgen/java/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace jtgen::java {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

const std::unordered_set<std::string_view>& keywords() {
    static const std::unordered_set<std::string_view> kws = {
        "abstract", "assert",   "boolean",    "break",   "byte",      "case",
        "catch",    "char",     "class",      "const",   "continue",  "default",
        "do",       "double",   "else",       "enum",    "extends",   "final",
        "finally",  "float",    "for",        "goto",    "if",        "implements",
        "import",   "instanceof", "int",      "interface", "long",    "native",
        "new",      "package",  "private",    "protected", "public",  "return",
        "short",    "static",   "strictfp",   "super",   "switch",    "synchronized",
        "this",     "throw",    "throws",     "transient", "try",     "void",
        "volatile", "while",    "true",       "false",   "null",
    };
    return kws;
}

// Two-character symbols we keep fused. '>' pairs are intentionally absent.
bool is_two_char_symbol(char a, char b) {
    switch (a) {
        case '=': return b == '=';
        case '!': return b == '=';
        case '<': return b == '=';
        case '>': return b == '=';
        case '&': return b == '&' || b == '=';
        case '|': return b == '|' || b == '=';
        case '+': return b == '+' || b == '=';
        case '-': return b == '-' || b == '=' || b == '>';
        case '*': return b == '=';
        case '/': return b == '=';
        case '%': return b == '=';
        case '^': return b == '=';
        case ':': return b == ':';
        default: return false;
    }
}

}  // namespace

bool is_java_keyword(std::string_view word) {
    return keywords().count(word) > 0;
}

TokenStream lex(std::string source) {
    std::vector<Token> tokens;
    const std::string& src = source;
    std::size_t i = 0;
    int line = 1;
    int col = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };

    auto push = [&](TokenKind kind, std::size_t start, std::size_t len, int tline, int tcol) {
        tokens.push_back(Token{kind, start, len, tline, tcol});
    };

    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }

        // comments
        if (c == '/' && i + 1 < src.size()) {
            if (src[i + 1] == '/') {
                while (i < src.size() && src[i] != '\n') advance(1);
                continue;
            }
            if (src[i + 1] == '*') {
                advance(2);
                while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) advance(1);
                advance(i + 1 < src.size() ? 2 : 1);
                continue;
            }
        }

        const std::size_t start = i;
        const int tline = line;
        const int tcol = col;

        if (ident_start(c)) {
            while (i < src.size() && ident_char(src[i])) advance(1);
            std::string_view word(src.data() + start, i - start);
            push(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start,
                 i - start, tline, tcol);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            // greedy numeric literal: digits, hex/bin prefix, underscores,
            // fraction, exponent, suffix
            advance(1);
            while (i < src.size()) {
                char d = src[i];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    advance(1);
                } else if ((d == '+' || d == '-') && (src[i - 1] == 'e' || src[i - 1] == 'E')) {
                    advance(1);
                } else {
                    break;
                }
            }
            push(TokenKind::Number, start, i - start, tline, tcol);
            continue;
        }

        if (c == '"') {
            // text block
            if (i + 2 < src.size() && src[i + 1] == '"' && src[i + 2] == '"') {
                advance(3);
                while (i + 2 < src.size() &&
                       !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) {
                    if (src[i] == '\\') advance(1);
                    advance(1);
                }
                advance(i + 2 < src.size() ? 3 : src.size() - i);
            } else {
                advance(1);
                while (i < src.size() && src[i] != '"' && src[i] != '\n') {
                    if (src[i] == '\\') advance(1);
                    advance(1);
                }
                if (i < src.size() && src[i] == '"') advance(1);
            }
            push(TokenKind::String, start, i - start, tline, tcol);
            continue;
        }

        if (c == '\'') {
            advance(1);
            while (i < src.size() && src[i] != '\'' && src[i] != '\n') {
                if (src[i] == '\\') advance(1);
                advance(1);
            }
            if (i < src.size() && src[i] == '\'') advance(1);
            push(TokenKind::CharLiteral, start, i - start, tline, tcol);
            continue;
        }

        // symbols
        std::size_t len = 1;
        if (i + 1 < src.size() && is_two_char_symbol(c, src[i + 1])) len = 2;
        advance(len);
        push(TokenKind::Symbol, start, len, tline, tcol);
    }

    return TokenStream(std::move(source), std::move(tokens));
}

}  // namespace jtgen::java
