#pragma once

// Q-COSMIC generic software model: the parsed description of a hybrid
// classical/quantum system and the rules that derive element natures.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcosmic {

enum class Nature : std::uint8_t { classical, quantum };

std::string_view to_string(Nature nature) noexcept;
std::optional<Nature> nature_from_string(std::string_view text) noexcept;

inline Nature operator|(Nature lhs, Nature rhs) noexcept
{
    return (lhs == Nature::quantum || rhs == Nature::quantum) ? Nature::quantum : Nature::classical;
}

/// The eight countable data-movement kinds, in report column order.
enum class MovementKind : std::uint8_t { entry, exit, read, write, qentry, qexit, qread, qwrite };

inline constexpr std::array<MovementKind, 8> all_movement_kinds = {
    MovementKind::entry,  MovementKind::exit,  MovementKind::read,  MovementKind::write,
    MovementKind::qentry, MovementKind::qexit, MovementKind::qread, MovementKind::qwrite,
};

/// Short tag used in reports and diagrams: E, X, R, W, QE, QX, QR, QW.
std::string_view kind_tag(MovementKind kind) noexcept;
/// DSL keyword: entry, exit, ..., qwrite.
std::string_view kind_keyword(MovementKind kind) noexcept;
std::optional<MovementKind> kind_from_keyword(std::string_view keyword) noexcept;

bool movement_is_quantum(MovementKind kind) noexcept;
/// R, W, QR, QW: movements whose counterpart is persistent storage.
bool is_storage_kind(MovementKind kind) noexcept;
/// E, R, QE, QR: data flows into the functional process.
bool is_inbound_kind(MovementKind kind) noexcept;
/// E <-> X and QE <-> QX; storage kinds have no mirror.
std::optional<MovementKind> mirror_kind(MovementKind kind) noexcept;

enum class Conversion : std::uint8_t { none, state_preparation, measurement };

enum class EndpointKind : std::uint8_t { user, storage, process, layer };
std::string_view to_string(EndpointKind kind) noexcept;

enum class Direction : std::uint8_t { from, to };

struct Span
{
    std::string file;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    std::uint32_t length = 0;

    bool operator==(const Span&) const = default;
};

// Element equality is structural: source spans never participate.

struct Endpoint
{
    Direction direction = Direction::from;
    EndpointKind kind = EndpointKind::user;
    std::string name;

    bool operator==(const Endpoint&) const = default;
};

struct DataMovement
{
    MovementKind kind = MovementKind::entry;
    std::string data_group;
    Endpoint counterpart;
    Conversion conversion = Conversion::none;
    Span span;

    friend bool operator==(const DataMovement& a, const DataMovement& b) noexcept
    {
        return a.kind == b.kind && a.data_group == b.data_group && a.counterpart == b.counterpart &&
               a.conversion == b.conversion;
    }
};

struct Attribute
{
    std::string name;
    Nature nature = Nature::classical;
    Span span;

    friend bool operator==(const Attribute& a, const Attribute& b) noexcept
    {
        return a.name == b.name && a.nature == b.nature;
    }
};

struct DataGroup
{
    std::string name;
    std::vector<Attribute> attributes;
    Span span;

    friend bool operator==(const DataGroup& a, const DataGroup& b) noexcept
    {
        return a.name == b.name && a.attributes == b.attributes;
    }
};

/// Layers, functional users and persistent storages declare their nature.
template <class Tag>
struct DeclaredElement
{
    std::string name;
    Nature nature = Nature::classical;
    Span span;

    friend bool operator==(const DeclaredElement& a, const DeclaredElement& b) noexcept
    {
        return a.name == b.name && a.nature == b.nature;
    }
};

using Layer = DeclaredElement<struct LayerTag>;
using FunctionalUser = DeclaredElement<struct UserTag>;
using PersistentStorage = DeclaredElement<struct StorageTag>;

struct FunctionalProcess
{
    std::string name;
    std::string layer;
    std::vector<std::string> uses;
    std::vector<DataMovement> movements;
    Span span;

    friend bool operator==(const FunctionalProcess& a, const FunctionalProcess& b) noexcept
    {
        return a.name == b.name && a.layer == b.layer && a.uses == b.uses && a.movements == b.movements;
    }
};

struct Model
{
    std::string name;
    std::string purpose;
    std::string scope;
    std::vector<Layer> layers;
    std::vector<FunctionalUser> users;
    std::vector<PersistentStorage> storages;
    std::vector<DataGroup> data_groups;
    std::vector<FunctionalProcess> processes;
    Span span;

    const Layer* find_layer(std::string_view name) const noexcept;
    const FunctionalUser* find_user(std::string_view name) const noexcept;
    const PersistentStorage* find_storage(std::string_view name) const noexcept;
    const DataGroup* find_data_group(std::string_view name) const noexcept;
    const FunctionalProcess* find_process(std::string_view name) const noexcept;

    friend bool operator==(const Model& a, const Model& b) noexcept
    {
        return a.name == b.name && a.purpose == b.purpose && a.scope == b.scope && a.layers == b.layers &&
               a.users == b.users && a.storages == b.storages && a.data_groups == b.data_groups &&
               a.processes == b.processes;
    }
};

/// Raised when a name inside a process does not resolve to a declaration.
class ReferenceError : public std::runtime_error
{
public:
    ReferenceError(std::string_view category, std::string name);

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Quantum iff at least one attribute is quantum. An empty group is classical.
Nature data_group_nature(const DataGroup& group) noexcept;

/// Quantum iff the containing layer is quantum, any movement touches a
/// quantum data group, or any movement carries a conversion.
Nature process_nature(const FunctionalProcess& process, const Model& model);

/// Nature of whatever a movement endpoint names (process natures are derived).
Nature endpoint_nature(const Endpoint& endpoint, const Model& model);

/// Quantum iff any layer, user, storage, data group or process is quantum.
Nature system_nature(const Model& model);

} // namespace qcosmic
