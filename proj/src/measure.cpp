#include "qcosmic/measure.hpp"

#include "qcosmic/rules.hpp"

#include <algorithm>

namespace qcosmic {

std::string_view to_string(DedupPolicy policy) noexcept
{
    return policy == DedupPolicy::cosmic ? "cosmic" : "endpoint";
}

std::optional<DedupPolicy> dedup_from_string(std::string_view text) noexcept
{
    if (text == "endpoint")
        return DedupPolicy::endpoint;
    if (text == "cosmic")
        return DedupPolicy::cosmic;
    return std::nullopt;
}

MovementKey movement_key(const DataMovement& movement, DedupPolicy policy)
{
    MovementKey key{movement.kind, movement.data_group, std::nullopt};
    if (policy == DedupPolicy::endpoint)
        key.counterpart = Endpoint{Direction::from, movement.counterpart.kind, movement.counterpart.name};
    return key;
}

std::vector<MovementKey> unique_movements(const FunctionalProcess& process, DedupPolicy policy)
{
    std::vector<MovementKey> keys;
    for (const DataMovement& m : process.movements) {
        MovementKey key = movement_key(m, policy);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            keys.push_back(std::move(key));
    }
    return keys;
}

std::uint64_t KindTally::total() const noexcept
{
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts)
        sum += c;
    return sum;
}

std::uint64_t KindTally::quantum() const noexcept
{
    std::uint64_t sum = 0;
    for (MovementKind kind : all_movement_kinds)
        if (movement_is_quantum(kind))
            sum += (*this)[kind];
    return sum;
}

namespace {

const Layer& require_layer(const Model& model, const std::string& name)
{
    const Layer* layer = model.find_layer(name);
    if (layer == nullptr)
        throw ReferenceError("layer", name);
    return *layer;
}

const Layer& layer_for_kind(MovementKind kind, const FunctionalProcess& process, const Model& model)
{
    const Layer& home = require_layer(model, process.layer);
    if (home.nature == Nature::classical || movement_is_quantum(kind))
        return home;

    for (const DataMovement& m : process.movements) {
        if (m.conversion == Conversion::none || m.counterpart.kind != EndpointKind::layer)
            continue;
        const Layer* partner = model.find_layer(m.counterpart.name);
        if (partner != nullptr && partner->nature == Nature::classical)
            return *partner;
    }
    for (const Layer& layer : model.layers)
        if (layer.nature == Nature::classical)
            return layer;
    return home;
}

} // namespace

const Layer& attributed_layer(const DataMovement& movement, const FunctionalProcess& process, const Model& model)
{
    return layer_for_kind(movement.kind, process, model);
}

std::uint64_t measure_process(const FunctionalProcess& process, DedupPolicy policy)
{
    return unique_movements(process, policy).size();
}

std::uint64_t measure_layer(const Layer& layer, const Model& model, DedupPolicy policy)
{
    std::uint64_t size = 0;
    for (const FunctionalProcess& p : model.processes)
        for (const MovementKey& key : unique_movements(p, policy))
            if (layer_for_kind(key.kind, p, model).name == layer.name)
                ++size;
    return size;
}

Percent Percent::of(std::uint64_t part, std::uint64_t whole) noexcept
{
    if (whole == 0)
        return {};
    return Percent{static_cast<std::uint32_t>((2 * part * 1000 + whole) / (2 * whole))};
}

std::string Percent::str() const
{
    return std::to_string(tenths / 10) + '.' + std::to_string(tenths % 10);
}

UnvalidatedModel::UnvalidatedModel(std::vector<Diagnostic> diagnostics)
    : std::runtime_error("unvalidated model: " + std::to_string(count_severity(diagnostics, Severity::error)) +
                         " validation error(s) must be fixed before measuring"),
      diagnostics_(std::move(diagnostics))
{
}

MeasurementReport measure_system(const Model& model, DedupPolicy policy)
{
    std::vector<Diagnostic> diagnostics = validate(model);
    if (has_errors(diagnostics))
        throw UnvalidatedModel(std::move(diagnostics));

    MeasurementReport report;
    report.system_name = model.name;
    report.dedup = policy;
    report.cfpv5_equivalent = system_nature(model) == Nature::classical;

    std::vector<std::uint64_t> layer_totals(model.layers.size(), 0);
    auto layer_index = [&](const Layer& layer) {
        return static_cast<std::size_t>(&layer - model.layers.data());
    };

    for (const FunctionalProcess& p : model.processes) {
        ProcessSize size;
        size.name = p.name;
        size.layer = p.layer;
        size.nature = process_nature(p, model);

        std::vector<std::uint64_t> shares(model.layers.size(), 0);
        for (const MovementKey& key : unique_movements(p, policy)) {
            ++size.tally[key.kind];
            ++shares[layer_index(layer_for_kind(key.kind, p, model))];
        }
        size.qcfp = size.tally.total();
        for (std::size_t i = 0; i < shares.size(); ++i) {
            layer_totals[i] += shares[i];
            if (shares[i] > 0)
                size.layer_shares.push_back(LayerShare{model.layers[i].name, shares[i]});
        }

        for (MovementKind kind : all_movement_kinds)
            report.totals.tally[kind] += size.tally[kind];
        report.per_process.push_back(std::move(size));
    }

    for (std::size_t i = 0; i < model.layers.size(); ++i)
        report.per_layer.push_back(LayerSize{model.layers[i].name, model.layers[i].nature, layer_totals[i]});

    Totals& t = report.totals;
    t.total_qcfp = t.tally.total();
    t.quantum_qcfp = t.tally.quantum();
    t.classical_qcfp = t.tally.classical();
    t.classical_percent = Percent::of(t.classical_qcfp, t.total_qcfp);
    t.quantum_percent = Percent::of(t.quantum_qcfp, t.total_qcfp);
    return report;
}

} // namespace qcosmic
