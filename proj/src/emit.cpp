#include "qcosmic/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace qcosmic {

std::string_view to_string(OutputFormat format) noexcept
{
    switch (format) {
    case OutputFormat::text:
        return "text";
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::dot:
        return "dot";
    }
    return "text";
}

std::optional<OutputFormat> format_from_string(std::string_view text) noexcept
{
    for (OutputFormat f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv, OutputFormat::dot})
        if (to_string(f) == text)
            return f;
    return std::nullopt;
}

// ----------------------------------------------------------------------------
// Text

namespace {

struct Column
{
    std::string header;
    bool numeric = false;
};

class Table
{
public:
    explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const
    {
        std::vector<std::size_t> widths;
        for (const Column& c : columns_)
            widths.push_back(c.header.size());
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());

        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            std::string text;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i > 0)
                    text += "  ";
                const std::string pad(widths[i] - cells[i].size(), ' ');
                text += columns_[i].numeric ? pad + cells[i] : cells[i] + pad;
            }
            while (!text.empty() && text.back() == ' ')
                text.pop_back();
            out += text + '\n';
        };
        std::vector<std::string> headers;
        for (const Column& c : columns_)
            headers.push_back(c.header);
        line(headers);
        for (const auto& row : rows_)
            line(row);
        return out;
    }

private:
    std::vector<Column> columns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace

std::string render_text(const MeasurementReport& report, const RenderOptions& opts)
{
    std::string out = "Q-COSMIC functional size: " + report.system_name + "\n";
    out += "dedup: " + std::string(to_string(report.dedup)) + "\n\n";

    if (report.per_process.empty()) {
        out += "no functional processes\n";
    } else {
        std::vector<Column> columns = {{"PROCESS"}, {"LAYER"}, {"NATURE"}};
        for (MovementKind kind : all_movement_kinds)
            columns.push_back({std::string(kind_tag(kind)), true});
        columns.push_back({"QCFP", true});
        Table table(std::move(columns));
        for (const ProcessSize& p : report.per_process) {
            std::vector<std::string> row = {p.name, p.layer, std::string(to_string(p.nature))};
            for (MovementKind kind : all_movement_kinds)
                row.push_back(std::to_string(p.tally[kind]));
            row.push_back(std::to_string(p.qcfp));
            table.add(std::move(row));
        }
        out += table.str();
    }

    if (opts.by_layer && !report.per_layer.empty()) {
        Table table({{"LAYER"}, {"NATURE"}, {"QCFP", true}});
        for (const LayerSize& l : report.per_layer)
            table.add({l.name, std::string(to_string(l.nature)), std::to_string(l.qcfp)});
        out += '\n' + table.str();
    }

    const Totals& t = report.totals;
    out += '\n';
    out += "TOTAL " + std::to_string(t.total_qcfp) + " QCFP";
    if (t.total_qcfp > 0) {
        out += " (classical " + std::to_string(t.classical_qcfp) + " / quantum " + std::to_string(t.quantum_qcfp) +
               ")\n";
        out += "classical " + t.classical_percent.str() + "% / quantum " + t.quantum_percent.str() + "%";
    }
    out += '\n';
    if (report.cfpv5_equivalent)
        out += "note: classical-only system; CFPv5-equivalent (" + std::to_string(t.total_qcfp) + " CFP)\n";
    return out;
}

// ----------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json tally_json(const KindTally& tally)
{
    nlohmann::json j = nlohmann::json::object();
    for (MovementKind kind : all_movement_kinds)
        j[std::string(kind_tag(kind))] = tally[kind];
    return j;
}

} // namespace

std::string render_json(const MeasurementReport& report)
{
    using nlohmann::json;
    json processes = json::array();
    for (const ProcessSize& p : report.per_process) {
        json shares = json::array();
        for (const LayerShare& s : p.layer_shares)
            shares.push_back(json{{"layer", s.layer}, {"qcfp", s.qcfp}});
        processes.push_back(json{
            {"name", p.name},
            {"layer", p.layer},
            {"nature", to_string(p.nature)},
            {"qcfp", p.qcfp},
            {"tally", tally_json(p.tally)},
            {"layer_contributions", std::move(shares)},
        });
    }
    json layers = json::array();
    for (const LayerSize& l : report.per_layer)
        layers.push_back(json{{"name", l.name}, {"nature", to_string(l.nature)}, {"qcfp", l.qcfp}});

    const Totals& t = report.totals;
    json root = {
        {"schema", json_schema_id},
        {"system", report.system_name},
        {"dedup", to_string(report.dedup)},
        {"cfpv5_equivalent", report.cfpv5_equivalent},
        {"total_qcfp", t.total_qcfp},
        {"classical_qcfp", t.classical_qcfp},
        {"quantum_qcfp", t.quantum_qcfp},
        {"classical_percent", t.classical_percent.str()},
        {"quantum_percent", t.quantum_percent.str()},
        {"tally", tally_json(t.tally)},
        {"processes", std::move(processes)},
        {"layers", std::move(layers)},
    };
    // nlohmann::json objects are std::map-backed, so keys come out sorted.
    return root.dump(2) + '\n';
}

// ----------------------------------------------------------------------------
// CSV

namespace {

std::string csv_field(const std::string& field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string render_csv(const MeasurementReport& report)
{
    std::string out = "process,layer,nature";
    for (MovementKind kind : all_movement_kinds)
        out += ',' + std::string(kind_tag(kind));
    out += ",qcfp\n";

    auto counts = [](const KindTally& tally) {
        std::string s;
        for (MovementKind kind : all_movement_kinds)
            s += ',' + std::to_string(tally[kind]);
        return s;
    };
    for (const ProcessSize& p : report.per_process) {
        out += csv_field(p.name) + ',' + csv_field(p.layer) + ',' + std::string(to_string(p.nature));
        out += counts(p.tally) + ',' + std::to_string(p.qcfp) + '\n';
    }
    out += "TOTAL,,";
    out += counts(report.totals.tally) + ',' + std::to_string(report.totals.total_qcfp) + '\n';
    return out;
}

// ----------------------------------------------------------------------------
// DOT

namespace {

std::string dot_quoted(std::string_view text)
{
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + '"';
}

std::string html_escaped(std::string_view text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        case '\n':
            out += "<BR/>";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string node_style(std::string_view name, Nature nature)
{
    if (nature == Nature::quantum)
        return "label=<<B>" + html_escaped(name) + "</B>>, peripheries=2";
    return "label=" + dot_quoted(name) + ", peripheries=1";
}

class DotWriter
{
public:
    DotWriter(const Model& model, const RenderOptions& opts) : model_(model), opts_(opts) {}

    std::string run()
    {
        select();
        std::string out = "digraph " + dot_quoted(model_.name) + " {\n";
        if (users_.empty() && storages_.empty() && layers_.empty() && processes_.empty())
            return out + "}\n";

        out += "  rankdir=LR;\n";
        out += "  node [fontname=\"Helvetica\"];\n";
        out += "  edge [fontname=\"Helvetica\"];\n";

        for (std::size_t i : users_) {
            const FunctionalUser& u = model_.users[i];
            out += "  u" + std::to_string(i) + " [" + node_style(u.name, u.nature) + ", shape=box];\n";
        }

        out += "  subgraph cluster_boundary {\n";
        out += "    label=" + dot_quoted(model_.name) + ";\n";
        out += "    style=dashed;\n";
        for (std::size_t li : layers_) {
            const Layer& l = model_.layers[li];
            out += "    subgraph cluster_layer_" + std::to_string(li) + " {\n";
            out += "      label=\"\";\n";
            out += std::string("      style=") + (l.nature == Nature::quantum ? "bold" : "solid") + ";\n";
            out += "      l" + std::to_string(li) + " [" + node_style(l.name, l.nature) + ", shape=tab];\n";
            for (std::size_t pi : processes_) {
                const FunctionalProcess& p = model_.processes[pi];
                if (p.layer != l.name)
                    continue;
                out += "      p" + std::to_string(pi) + " [" + node_style(p.name, process_nature(p, model_)) +
                       ", shape=box, style=rounded];\n";
            }
            out += "    }\n";
        }
        out += "  }\n";

        for (std::size_t i : storages_) {
            const PersistentStorage& s = model_.storages[i];
            out += "  s" + std::to_string(i) + " [" + node_style(s.name, s.nature) + ", shape=cylinder];\n";
        }

        for (std::size_t pi : processes_) {
            if (opts_.scope && model_.processes[pi].name != *opts_.scope)
                continue;
            edges(pi, out);
        }
        out += "}\n";
        return out;
    }

private:
    template <class List>
    static std::size_t index_of(const List& list, std::string_view name)
    {
        auto it = std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.name == name; });
        return static_cast<std::size_t>(it - list.begin());
    }

    std::string node_id(const Endpoint& e) const
    {
        switch (e.kind) {
        case EndpointKind::user:
            return "u" + std::to_string(index_of(model_.users, e.name));
        case EndpointKind::storage:
            return "s" + std::to_string(index_of(model_.storages, e.name));
        case EndpointKind::process:
            return "p" + std::to_string(index_of(model_.processes, e.name));
        case EndpointKind::layer:
            return "l" + std::to_string(index_of(model_.layers, e.name));
        }
        return {};
    }

    void select()
    {
        if (!opts_.scope) {
            for (std::size_t i = 0; i < model_.users.size(); ++i)
                users_.insert(i);
            for (std::size_t i = 0; i < model_.storages.size(); ++i)
                storages_.insert(i);
            for (std::size_t i = 0; i < model_.layers.size(); ++i)
                layers_.insert(i);
            for (std::size_t i = 0; i < model_.processes.size(); ++i)
                processes_.insert(i);
            return;
        }

        const std::size_t pi = index_of(model_.processes, *opts_.scope);
        if (pi == model_.processes.size())
            throw EmitError("unknown process " + dot_quoted(*opts_.scope) + " in diagram scope");
        const FunctionalProcess& p = model_.processes[pi];
        processes_.insert(pi);
        layers_.insert(index_of(model_.layers, p.layer));
        for (const DataMovement& m : p.movements) {
            const Endpoint& e = m.counterpart;
            switch (e.kind) {
            case EndpointKind::user:
                users_.insert(index_of(model_.users, e.name));
                break;
            case EndpointKind::storage:
                storages_.insert(index_of(model_.storages, e.name));
                break;
            case EndpointKind::layer:
                layers_.insert(index_of(model_.layers, e.name));
                break;
            case EndpointKind::process: {
                const std::size_t other = index_of(model_.processes, e.name);
                processes_.insert(other);
                layers_.insert(index_of(model_.layers, model_.processes[other].layer));
                break;
            }
            }
        }
    }

    void edges(std::size_t pi, std::string& out) const
    {
        const FunctionalProcess& p = model_.processes[pi];
        const std::string self = "p" + std::to_string(pi);
        std::vector<MovementKey> seen;
        for (const DataMovement& m : p.movements) {
            MovementKey key = movement_key(m, opts_.dedup);
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                continue;
            seen.push_back(key);

            const std::string other = node_id(m.counterpart);
            const bool inbound = is_inbound_kind(m.kind);
            std::string label = std::string(kind_tag(m.kind)) + ": " + m.data_group;
            if (m.conversion == Conversion::state_preparation)
                label += " (prepare)";
            else if (m.conversion == Conversion::measurement)
                label += " (measure)";

            out += "  " + (inbound ? other : self) + " -> " + (inbound ? self : other) + " [label=";
            if (movement_is_quantum(m.kind))
                out += "<<B>" + html_escaped(label) + "</B>>, penwidth=2";
            else
                out += dot_quoted(label) + ", penwidth=1";
            out += "];\n";
        }
    }

    const Model& model_;
    const RenderOptions& opts_;
    std::set<std::size_t> users_;
    std::set<std::size_t> storages_;
    std::set<std::size_t> layers_;
    std::set<std::size_t> processes_;
};

} // namespace

std::string render_dot(const Model& model, const RenderOptions& opts)
{
    return DotWriter(model, opts).run();
}

} // namespace qcosmic
