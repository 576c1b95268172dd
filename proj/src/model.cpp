#include "qcosmic/model.hpp"

#include <algorithm>

namespace qcosmic {

std::string_view to_string(Nature nature) noexcept
{
    return nature == Nature::quantum ? "quantum" : "classical";
}

std::optional<Nature> nature_from_string(std::string_view text) noexcept
{
    if (text == "classical")
        return Nature::classical;
    if (text == "quantum")
        return Nature::quantum;
    return std::nullopt;
}

namespace {

struct KindInfo
{
    std::string_view tag;
    std::string_view keyword;
};

constexpr std::array<KindInfo, 8> kind_table = {{
    {"E", "entry"},
    {"X", "exit"},
    {"R", "read"},
    {"W", "write"},
    {"QE", "qentry"},
    {"QX", "qexit"},
    {"QR", "qread"},
    {"QW", "qwrite"},
}};

template <class Range, class Name>
auto find_named(const Range& range, Name name) noexcept -> decltype(&*range.begin())
{
    auto it = std::find_if(range.begin(), range.end(), [&](const auto& e) { return e.name == name; });
    return it == range.end() ? nullptr : &*it;
}

} // namespace

std::string_view kind_tag(MovementKind kind) noexcept
{
    return kind_table[static_cast<std::size_t>(kind)].tag;
}

std::string_view kind_keyword(MovementKind kind) noexcept
{
    return kind_table[static_cast<std::size_t>(kind)].keyword;
}

std::optional<MovementKind> kind_from_keyword(std::string_view keyword) noexcept
{
    for (MovementKind kind : all_movement_kinds)
        if (kind_keyword(kind) == keyword)
            return kind;
    return std::nullopt;
}

bool movement_is_quantum(MovementKind kind) noexcept
{
    switch (kind) {
    case MovementKind::qentry:
    case MovementKind::qexit:
    case MovementKind::qread:
    case MovementKind::qwrite:
        return true;
    default:
        return false;
    }
}

bool is_storage_kind(MovementKind kind) noexcept
{
    switch (kind) {
    case MovementKind::read:
    case MovementKind::write:
    case MovementKind::qread:
    case MovementKind::qwrite:
        return true;
    default:
        return false;
    }
}

bool is_inbound_kind(MovementKind kind) noexcept
{
    switch (kind) {
    case MovementKind::entry:
    case MovementKind::read:
    case MovementKind::qentry:
    case MovementKind::qread:
        return true;
    default:
        return false;
    }
}

std::optional<MovementKind> mirror_kind(MovementKind kind) noexcept
{
    switch (kind) {
    case MovementKind::entry:
        return MovementKind::exit;
    case MovementKind::exit:
        return MovementKind::entry;
    case MovementKind::qentry:
        return MovementKind::qexit;
    case MovementKind::qexit:
        return MovementKind::qentry;
    default:
        return std::nullopt;
    }
}

std::string_view to_string(EndpointKind kind) noexcept
{
    switch (kind) {
    case EndpointKind::user:
        return "user";
    case EndpointKind::storage:
        return "storage";
    case EndpointKind::process:
        return "process";
    case EndpointKind::layer:
        return "layer";
    }
    return "user";
}

const Layer* Model::find_layer(std::string_view n) const noexcept { return find_named(layers, n); }
const FunctionalUser* Model::find_user(std::string_view n) const noexcept { return find_named(users, n); }
const PersistentStorage* Model::find_storage(std::string_view n) const noexcept { return find_named(storages, n); }
const DataGroup* Model::find_data_group(std::string_view n) const noexcept { return find_named(data_groups, n); }
const FunctionalProcess* Model::find_process(std::string_view n) const noexcept { return find_named(processes, n); }

ReferenceError::ReferenceError(std::string_view category, std::string name)
    : std::runtime_error("unresolved " + std::string(category) + " reference \"" + name + "\""),
      name_(std::move(name))
{
}

Nature data_group_nature(const DataGroup& group) noexcept
{
    Nature result = Nature::classical;
    for (const Attribute& attr : group.attributes)
        result = result | attr.nature;
    return result;
}

namespace {

bool endpoint_resolves(const Endpoint& endpoint, const Model& model) noexcept
{
    switch (endpoint.kind) {
    case EndpointKind::user:
        return model.find_user(endpoint.name) != nullptr;
    case EndpointKind::storage:
        return model.find_storage(endpoint.name) != nullptr;
    case EndpointKind::process:
        return model.find_process(endpoint.name) != nullptr;
    case EndpointKind::layer:
        return model.find_layer(endpoint.name) != nullptr;
    }
    return false;
}

} // namespace

Nature process_nature(const FunctionalProcess& process, const Model& model)
{
    const Layer* layer = model.find_layer(process.layer);
    if (layer == nullptr)
        throw ReferenceError("layer", process.layer);

    // Counterpart natures do not propagate into the process; only what the
    // process itself owns or moves does.
    Nature result = layer->nature;
    for (const DataMovement& m : process.movements) {
        const DataGroup* group = model.find_data_group(m.data_group);
        if (group == nullptr)
            throw ReferenceError("data group", m.data_group);
        if (!endpoint_resolves(m.counterpart, model))
            throw ReferenceError(to_string(m.counterpart.kind), m.counterpart.name);
        result = result | data_group_nature(*group);
        if (m.conversion != Conversion::none)
            result = Nature::quantum;
    }
    return result;
}

Nature endpoint_nature(const Endpoint& endpoint, const Model& model)
{
    switch (endpoint.kind) {
    case EndpointKind::user:
        if (const auto* user = model.find_user(endpoint.name))
            return user->nature;
        break;
    case EndpointKind::storage:
        if (const auto* storage = model.find_storage(endpoint.name))
            return storage->nature;
        break;
    case EndpointKind::layer:
        if (const auto* layer = model.find_layer(endpoint.name))
            return layer->nature;
        break;
    case EndpointKind::process:
        if (const auto* process = model.find_process(endpoint.name))
            return process_nature(*process, model);
        break;
    }
    throw ReferenceError(to_string(endpoint.kind), endpoint.name);
}

Nature system_nature(const Model& model)
{
    Nature result = Nature::classical;
    for (const Layer& layer : model.layers)
        result = result | layer.nature;
    for (const FunctionalUser& user : model.users)
        result = result | user.nature;
    for (const PersistentStorage& storage : model.storages)
        result = result | storage.nature;
    for (const DataGroup& group : model.data_groups)
        result = result | data_group_nature(group);
    for (const FunctionalProcess& process : model.processes)
        result = result | process_nature(process, model);
    return result;
}

} // namespace qcosmic
