#pragma once

#include "qcosmic/measure.hpp"
#include "qcosmic/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qcosmic {

enum class OutputFormat : std::uint8_t { text, json, csv, dot };

std::string_view to_string(OutputFormat format) noexcept;
std::optional<OutputFormat> format_from_string(std::string_view text) noexcept;

struct RenderOptions
{
    OutputFormat format = OutputFormat::text;
    /// Adds the per-layer table to text output.
    bool by_layer = false;
    /// Diagram a single functional process instead of the whole system.
    std::optional<std::string> scope;
    DedupPolicy dedup = DedupPolicy::endpoint;
};

class EmitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Version tag written at the top level of every JSON report.
inline constexpr std::string_view json_schema_id = "qcosmic-report/1";

std::string render_text(const MeasurementReport& report, const RenderOptions& opts = {});

/// Canonical JSON: keys sorted, arrays in declaration order, percentages as
/// one-decimal strings, LF-terminated.
std::string render_json(const MeasurementReport& report);

/// `process,layer,nature,E,X,R,W,QE,QX,QR,QW,qcfp`, one row per process,
/// then a TOTAL row.
std::string render_csv(const MeasurementReport& report);

/// Context diagram in Graphviz DOT. Quantum elements get a double border
/// and bold label, quantum movements a doubled pen width. Throws EmitError
/// if `opts.scope` names no declared process.
std::string render_dot(const Model& model, const RenderOptions& opts = {});

} // namespace qcosmic
