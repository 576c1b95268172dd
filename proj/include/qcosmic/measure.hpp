#pragma once

#include "qcosmic/diagnostic.hpp"
#include "qcosmic/model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcosmic {

/// How duplicate movements inside one functional process collapse.
enum class DedupPolicy : std::uint8_t {
    endpoint, ///< (kind, data group, counterpart)
    cosmic,   ///< (kind, data group), as in the COSMIC manual
};

std::string_view to_string(DedupPolicy policy) noexcept;
std::optional<DedupPolicy> dedup_from_string(std::string_view text) noexcept;

struct MovementKey
{
    MovementKind kind = MovementKind::entry;
    std::string data_group;
    /// Empty under DedupPolicy::cosmic.
    std::optional<Endpoint> counterpart;

    bool operator==(const MovementKey&) const = default;
};

/// Key under which `movement` is de-duplicated. Direction is implied by the
/// kind, so only the endpoint category and name are kept.
MovementKey movement_key(const DataMovement& movement, DedupPolicy policy);

/// Distinct movements of `process` in first-occurrence order.
std::vector<MovementKey> unique_movements(const FunctionalProcess& process,
                                          DedupPolicy policy = DedupPolicy::endpoint);

/// Movement counts indexed by MovementKind.
struct KindTally
{
    std::array<std::uint64_t, 8> counts{};

    std::uint64_t& operator[](MovementKind kind) noexcept { return counts[static_cast<std::size_t>(kind)]; }
    std::uint64_t operator[](MovementKind kind) const noexcept { return counts[static_cast<std::size_t>(kind)]; }
    std::uint64_t total() const noexcept;
    std::uint64_t quantum() const noexcept;
    std::uint64_t classical() const noexcept { return total() - quantum(); }

    bool operator==(const KindTally&) const = default;
};

/// Layer that a movement of `process` is sized in.
///
/// Movements count in the process's own layer, except that classical-kind
/// movements of a process in a quantum layer belong to the classical side of
/// that process's conversions: the classical layer its `via prepare`/`via
/// measure` movements cross from or to, else the first declared classical
/// layer. Preparation and measurement crossings therefore stay with the
/// quantum process and its layer.
const Layer& attributed_layer(const DataMovement& movement, const FunctionalProcess& process, const Model& model);

std::uint64_t measure_process(const FunctionalProcess& process, DedupPolicy policy = DedupPolicy::endpoint);
std::uint64_t measure_layer(const Layer& layer, const Model& model, DedupPolicy policy = DedupPolicy::endpoint);

struct LayerShare
{
    std::string layer;
    std::uint64_t qcfp = 0;

    bool operator==(const LayerShare&) const = default;
};

struct ProcessSize
{
    std::string name;
    std::string layer;
    Nature nature = Nature::classical;
    std::uint64_t qcfp = 0;
    KindTally tally;
    /// Non-zero contributions of this process to each layer, in layer declaration order.
    std::vector<LayerShare> layer_shares;

    bool operator==(const ProcessSize&) const = default;
};

struct LayerSize
{
    std::string name;
    Nature nature = Nature::classical;
    std::uint64_t qcfp = 0;

    bool operator==(const LayerSize&) const = default;
};

/// Percentage held in tenths of a percent, rounded half up (805 = 80.5%).
struct Percent
{
    std::uint32_t tenths = 0;

    static Percent of(std::uint64_t part, std::uint64_t whole) noexcept;
    std::string str() const;

    bool operator==(const Percent&) const = default;
};

struct Totals
{
    std::uint64_t total_qcfp = 0;
    std::uint64_t classical_qcfp = 0;
    std::uint64_t quantum_qcfp = 0;
    Percent classical_percent;
    Percent quantum_percent;
    KindTally tally;

    bool operator==(const Totals&) const = default;
};

struct MeasurementReport
{
    std::string system_name;
    DedupPolicy dedup = DedupPolicy::endpoint;
    std::vector<ProcessSize> per_process;
    std::vector<LayerSize> per_layer;
    Totals totals;
    bool cfpv5_equivalent = true;

    bool operator==(const MeasurementReport&) const = default;
};

/// Thrown by measure_system when validation reports errors.
class UnvalidatedModel : public std::runtime_error
{
public:
    explicit UnvalidatedModel(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Validates and then sizes the whole system.
MeasurementReport measure_system(const Model& model, DedupPolicy policy = DedupPolicy::endpoint);

} // namespace qcosmic
