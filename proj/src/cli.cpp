#include "qcosmic/cli.hpp"

#include "qcosmic/parser.hpp"
#include "qcosmic/rules.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace qcosmic {

namespace {

std::optional<std::string> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        return std::nullopt;
    return buffer.str();
}

bool format_allowed(Command command, OutputFormat format) noexcept
{
    switch (command) {
    case Command::measure:
        return format != OutputFormat::dot;
    case Command::diagram:
        return format == OutputFormat::dot;
    case Command::check:
    case Command::fmt:
        return true;
    }
    return false;
}

int emit(const CliConfig& config, const std::string& text, std::ostream& out, std::ostream& err)
{
    if (!config.output) {
        out << text;
        out.flush();
        return exit_ok;
    }
    std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
        err << "qcosmic: cannot write '" << *config.output << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

void print_summary(const std::vector<Diagnostic>& diagnostics, std::ostream& err)
{
    err << count_severity(diagnostics, Severity::error) << " error(s), "
        << count_severity(diagnostics, Severity::warning) << " warning(s)\n";
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    if (!format_allowed(config.command, config.format)) {
        err << "qcosmic: format '" << to_string(config.format) << "' is not valid for this command\n";
        return exit_usage;
    }

    const std::optional<std::string> source = read_file(config.input);
    if (!source) {
        err << "qcosmic: cannot read '" << config.input << "'\n";
        return exit_usage;
    }

    ParseResult parsed = parse_model(*source, config.input);
    if (!parsed.model) {
        err << render(parsed.diagnostics);
        print_summary(parsed.diagnostics, err);
        return exit_parse;
    }
    const Model& model = *parsed.model;

    if (config.command == Command::fmt) {
        err << render(parsed.diagnostics);
        return emit(config, format_model(model), out, err);
    }

    std::vector<Diagnostic> diagnostics = std::move(parsed.diagnostics);
    std::vector<Diagnostic> findings = validate(model);
    diagnostics.insert(diagnostics.end(), findings.begin(), findings.end());
    sort_diagnostics(diagnostics);
    err << render(diagnostics);

    const bool failed = has_errors(diagnostics);
    if (config.command == Command::check) {
        print_summary(diagnostics, err);
        return failed ? exit_validation : exit_ok;
    }
    if (failed) {
        print_summary(diagnostics, err);
        err << "qcosmic: refusing to " << (config.command == Command::measure ? "measure" : "diagram")
            << " a model with validation errors\n";
        return exit_validation;
    }

    RenderOptions opts;
    opts.format = config.format;
    opts.by_layer = config.by_layer;
    opts.scope = config.scope;
    opts.dedup = config.dedup;

    if (config.command == Command::diagram) {
        try {
            return emit(config, render_dot(model, opts), out, err);
        } catch (const EmitError& e) {
            err << "qcosmic: " << e.what() << '\n';
            return exit_usage;
        }
    }

    const MeasurementReport report = measure_system(model, config.dedup);
    switch (config.format) {
    case OutputFormat::json:
        return emit(config, render_json(report), out, err);
    case OutputFormat::csv:
        return emit(config, render_csv(report), out, err);
    default:
        return emit(config, render_text(report, opts), out, err);
    }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Q-COSMIC functional size measurement for hybrid classical/quantum software models", "qcosmic"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qcosmic 1.0.0");

    CliConfig config;
    std::string format;
    std::string dedup = "endpoint";
    std::string scope;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Model file (.qcm)")->required();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", config.output, "Write the result to this file instead of stdout");
    };

    CLI::App* check = app.add_subcommand("check", "Parse and validate a model; print diagnostics");
    add_input(check);

    CLI::App* measure = app.add_subcommand("measure", "Validate and measure a model in QCFP");
    add_input(measure);
    add_output(measure);
    measure->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    measure->add_flag("--by-layer", config.by_layer, "Include the per-layer breakdown in text output");
    measure->add_option("--dedup", dedup, "Duplicate-movement key")->check(CLI::IsMember({"endpoint", "cosmic"}));

    CLI::App* diagram = app.add_subcommand("diagram", "Emit a context diagram in DOT");
    add_input(diagram);
    add_output(diagram);
    diagram->add_option("--format", format, "Diagram format")->check(CLI::IsMember({"dot"}));
    diagram->add_option("--scope", scope, "Diagram a single functional process");
    diagram->add_option("--dedup", dedup, "Duplicate-movement key")->check(CLI::IsMember({"endpoint", "cosmic"}));

    CLI::App* fmt = app.add_subcommand("fmt", "Print the model in canonical form");
    add_input(fmt);
    add_output(fmt);

    std::vector<std::string> argv_storage{"qcosmic"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (check->parsed()) {
        config.command = Command::check;
    } else if (measure->parsed()) {
        config.command = Command::measure;
        config.format = format.empty() ? OutputFormat::text : *format_from_string(format);
    } else if (diagram->parsed()) {
        config.command = Command::diagram;
        config.format = OutputFormat::dot;
    } else {
        config.command = Command::fmt;
    }
    config.dedup = *dedup_from_string(dedup);
    if (!scope.empty())
        config.scope = scope;

    return run(config, out, err);
}

} // namespace qcosmic
