#pragma once

#include "qcosmic/model.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcosmic {

enum class Severity : std::uint8_t { error, warning };

std::string_view to_string(Severity severity) noexcept;

/// A parse or validation finding.
///
/// Rule codes R1..R9 and P1..P3 come from the validator. The parser uses
/// L1 (lexical), S1 (syntax), S2 (duplicate declaration), S3 (unresolved
/// reference) and S4 (empty system). Codes are stable.
struct Diagnostic
{
    Severity severity = Severity::error;
    std::string code;
    std::string message;
    std::optional<Span> span;
    std::string subject;

    bool operator==(const Diagnostic&) const = default;
};

bool has_errors(std::span<const Diagnostic> diagnostics) noexcept;
std::size_t count_severity(std::span<const Diagnostic> diagnostics, Severity severity) noexcept;

/// `severity[code] subject: message (file:line:col)`
std::string render(const Diagnostic& diagnostic);

/// One rendered diagnostic per line, LF-terminated.
std::string render(std::span<const Diagnostic> diagnostics);

/// Stable order: by source position, then code. Diagnostics without a span sort first.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

} // namespace qcosmic
