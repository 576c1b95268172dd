#pragma once

#include "qcosmic/diagnostic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcosmic {

enum class TokenKind : std::uint8_t { keyword, identifier, string, punctuation, end_of_input };

std::string_view to_string(TokenKind kind) noexcept;

struct Token
{
    TokenKind kind = TokenKind::end_of_input;
    /// Keyword/identifier/punctuation spelling, or the unescaped string contents.
    std::string text;
    Span span;
};

struct LexResult
{
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return diagnostics.empty(); }
};

bool is_keyword(std::string_view word) noexcept;

/// Splits `text` into tokens. `//` comments and whitespace are skipped; LF and
/// CRLF line endings are both accepted. On a lexical error the diagnostic
/// points at the first offending character and lexing continues after it, so
/// several errors can be reported in one pass. The token list always ends with
/// an end-of-input token.
LexResult tokenize(std::string_view text, std::string_view file = {});

} // namespace qcosmic
