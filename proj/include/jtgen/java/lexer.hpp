#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jtgen::java {

enum class TokenKind {
    Identifier,
    Keyword,
    Number,
    String,
    CharLiteral,
    Symbol,  // operators and punctuation
};

struct Token {
    TokenKind kind;
    std::size_t offset;  // byte offset into the source
    std::size_t length;
    int line;    // 1-based
    int column;  // 1-based
};

// A lexed compilation unit. Owns a copy of the source so token views stay
// valid for the lifetime of the stream.
class TokenStream {
public:
    TokenStream() = default;
    TokenStream(std::string source, std::vector<Token> tokens)
        : source_(std::move(source)), tokens_(std::move(tokens)) {}

    const std::string& source() const { return source_; }
    const std::vector<Token>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }

    std::string_view text(std::size_t index) const {
        const Token& t = tokens_[index];
        return std::string_view(source_).substr(t.offset, t.length);
    }

    const Token& at(std::size_t index) const { return tokens_[index]; }

    bool is(std::size_t index, std::string_view text_value) const {
        return index < tokens_.size() && text(index) == text_value;
    }

    bool is_keyword(std::size_t index, std::string_view kw) const {
        return index < tokens_.size() && tokens_[index].kind == TokenKind::Keyword &&
               text(index) == kw;
    }

    // Raw source slice spanning tokens [first, last], inclusive.
    std::string_view slice(std::size_t first, std::size_t last) const {
        const Token& a = tokens_[first];
        const Token& b = tokens_[last];
        return std::string_view(source_).substr(a.offset, b.offset + b.length - a.offset);
    }

private:
    std::string source_;
    std::vector<Token> tokens_;
};

// Tokenizes Java source. Comments and whitespace are skipped (raw byte
// offsets allow any later splice to preserve them). Analysis-oriented: '>'
// is never merged into shift operators so generic nesting stays trackable.
TokenStream lex(std::string source);

bool is_java_keyword(std::string_view word);

}  // namespace jtgen::java
