#pragma once

#include "qcosmic/diagnostic.hpp"
#include "qcosmic/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcosmic {

struct ParseResult
{
    /// Present only when no error-severity diagnostic was produced.
    std::optional<Model> model;
    std::vector<Diagnostic> diagnostics;
};

/// Parses a `.qcm` model.
///
/// Syntax errors are recovered at statement boundaries so that a single run
/// reports every broken statement. Duplicate declarations (S2) and names that
/// do not resolve to a declaration (S3) are errors; a returned model never
/// contains a dangling reference.
ParseResult parse_model(std::string_view text, std::string_view file = {});

/// Canonical source text: two-space indentation, LF line endings, elements
/// grouped by category in declaration order. Parsing the result yields a
/// model structurally equal to `model`.
std::string format_model(const Model& model);

/// Double-quoted literal with `\"`, `\\`, `\n`, `\t` and `\r` escapes.
std::string quote(std::string_view text);

} // namespace qcosmic
