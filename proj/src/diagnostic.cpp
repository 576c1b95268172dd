#include "qcosmic/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace qcosmic {

std::string_view to_string(Severity severity) noexcept
{
    return severity == Severity::error ? "error" : "warning";
}

bool has_errors(std::span<const Diagnostic> diagnostics) noexcept
{
    return count_severity(diagnostics, Severity::error) > 0;
}

std::size_t count_severity(std::span<const Diagnostic> diagnostics, Severity severity) noexcept
{
    return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                  [&](const Diagnostic& d) { return d.severity == severity; }));
}

std::string render(const Diagnostic& diagnostic)
{
    std::string out;
    out += to_string(diagnostic.severity);
    out += '[';
    out += diagnostic.code;
    out += "] ";
    if (!diagnostic.subject.empty()) {
        out += diagnostic.subject;
        out += ": ";
    }
    out += diagnostic.message;
    if (diagnostic.span) {
        const Span& s = *diagnostic.span;
        out += " (";
        out += s.file.empty() ? std::string("<input>") : s.file;
        out += ':' + std::to_string(s.line) + ':' + std::to_string(s.column) + ')';
    }
    return out;
}

std::string render(std::span<const Diagnostic> diagnostics)
{
    std::string out;
    for (const Diagnostic& d : diagnostics) {
        out += render(d);
        out += '\n';
    }
    return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics)
{
    auto key = [](const Diagnostic& d) {
        if (!d.span)
            return std::tuple<int, std::uint32_t, std::uint32_t>(0, 0, 0);
        return std::tuple<int, std::uint32_t, std::uint32_t>(1, d.span->line, d.span->column);
    };
    std::stable_sort(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& a, const Diagnostic& b) {
        auto ka = key(a);
        auto kb = key(b);
        if (ka != kb)
            return ka < kb;
        return a.code < b.code;
    });
}

} // namespace qcosmic
