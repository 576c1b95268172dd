#pragma once

#include "qcosmic/emit.hpp"
#include "qcosmic/measure.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcosmic {

enum class Command : std::uint8_t { check, measure, diagram, fmt };

struct CliConfig
{
    Command command = Command::check;
    std::string input;
    std::optional<std::string> output;
    OutputFormat format = OutputFormat::text;
    DedupPolicy dedup = DedupPolicy::endpoint;
    bool by_layer = false;
    std::optional<std::string> scope;
};

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1, ///< rule errors found
    exit_parse = 2,      ///< lexical or syntax failure
    exit_usage = 3,      ///< bad arguments or I/O failure
};

/// Runs one command. Reports go to `out` (or the configured output file),
/// diagnostics and messages go to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (argv without the program name) and runs the command.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcosmic
