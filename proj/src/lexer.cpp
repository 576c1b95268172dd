#include "qcosmic/lexer.hpp"

#include <algorithm>
#include <array>

namespace qcosmic {

namespace {

constexpr std::array<std::string_view, 26> keywords = {
    "system", "purpose", "scope",  "layer",   "user",   "storage", "datagroup", "attr",    "process",
    "in",     "uses",    "classical", "quantum", "entry", "exit",   "read",      "write",   "qentry",
    "qexit",  "qread",   "qwrite", "from",    "to",     "via",     "prepare",   "measure",
};

bool is_ident_start(char c) noexcept
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(char c) noexcept
{
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

bool is_utf8_continuation(char c) noexcept
{
    return (static_cast<unsigned char>(c) & 0xC0U) == 0x80U;
}

class Lexer
{
public:
    Lexer(std::string_view text, std::string_view file) : text_(text), file_(file) {}

    LexResult run()
    {
        LexResult result;
        while (true) {
            skip_trivia();
            if (at_end())
                break;
            lex_one(result);
        }
        result.tokens.push_back(Token{TokenKind::end_of_input, {}, span_here(0)});
        return result;
    }

private:
    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const noexcept
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() noexcept
    {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if (!is_utf8_continuation(c)) {
            ++column_;
        }
    }

    Span span_here(std::uint32_t length) const
    {
        return Span{std::string(file_), line_, column_, length};
    }

    void skip_trivia() noexcept
    {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    void lex_one(LexResult& result)
    {
        const char c = peek();
        if (is_ident_start(c)) {
            Span span = span_here(0);
            std::size_t start = pos_;
            while (!at_end() && is_ident_char(peek()))
                advance();
            std::string word(text_.substr(start, pos_ - start));
            span.length = static_cast<std::uint32_t>(word.size());
            TokenKind kind = is_keyword(word) ? TokenKind::keyword : TokenKind::identifier;
            result.tokens.push_back(Token{kind, std::move(word), std::move(span)});
            return;
        }
        if (c == '{' || c == '}' || c == ',' || c == ':') {
            result.tokens.push_back(Token{TokenKind::punctuation, std::string(1, c), span_here(1)});
            advance();
            return;
        }
        if (c == '"') {
            lex_string(result);
            return;
        }

        // Consume one whole UTF-8 sequence so the column stays meaningful.
        Span span = span_here(1);
        std::string shown;
        do {
            shown += peek();
            advance();
        } while (!at_end() && is_utf8_continuation(peek()));
        result.diagnostics.push_back(Diagnostic{Severity::error, "L1", "illegal character '" + shown + "'",
                                                std::move(span), {}});
    }

    void lex_string(LexResult& result)
    {
        Span span = span_here(0);
        const std::uint32_t start_column = column_;
        advance(); // opening quote
        std::string value;
        bool bad_escape = false;
        while (true) {
            if (at_end() || peek() == '\n' || (peek() == '\r' && peek(1) == '\n')) {
                span.length = column_ - start_column;
                result.diagnostics.push_back(
                    Diagnostic{Severity::error, "L1", "unterminated string literal", std::move(span), {}});
                return;
            }
            char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\') {
                Span escape_span = span_here(2);
                advance();
                if (at_end())
                    continue;
                char e = peek();
                switch (e) {
                case '"':
                    value += '"';
                    break;
                case '\\':
                    value += '\\';
                    break;
                case 'n':
                    value += '\n';
                    break;
                case 't':
                    value += '\t';
                    break;
                case 'r':
                    value += '\r';
                    break;
                default:
                    if (e == '\n')
                        continue; // reported as unterminated
                    bad_escape = true;
                    result.diagnostics.push_back(Diagnostic{Severity::error, "L1",
                                                            std::string("invalid escape sequence '\\") + e + "'",
                                                            std::move(escape_span), {}});
                    break;
                }
                advance();
                continue;
            }
            value += c;
            advance();
        }
        span.length = column_ - start_column;
        if (!bad_escape)
            result.tokens.push_back(Token{TokenKind::string, std::move(value), std::move(span)});
    }

    std::string_view text_;
    std::string_view file_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t column_ = 1;
};

} // namespace

std::string_view to_string(TokenKind kind) noexcept
{
    switch (kind) {
    case TokenKind::keyword:
        return "keyword";
    case TokenKind::identifier:
        return "identifier";
    case TokenKind::string:
        return "string";
    case TokenKind::punctuation:
        return "punctuation";
    case TokenKind::end_of_input:
        return "end of input";
    }
    return "token";
}

bool is_keyword(std::string_view word) noexcept
{
    return std::find(keywords.begin(), keywords.end(), word) != keywords.end();
}

LexResult tokenize(std::string_view text, std::string_view file)
{
    return Lexer(text, file).run();
}

} // namespace qcosmic
