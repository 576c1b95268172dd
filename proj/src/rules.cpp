#include "qcosmic/rules.hpp"

#include "qcosmic/parser.hpp"

#include <map>
#include <optional>
#include <set>

namespace qcosmic {

namespace {

class Validator
{
public:
    explicit Validator(const Model& model) : model_(model)
    {
        for (std::size_t i = 0; i < model.processes.size(); ++i) {
            const FunctionalProcess& p = model.processes[i];
            process_index_.emplace(p.name, i);
            process_nature_.emplace(p.name, process_nature(p, model));
        }
    }

    std::vector<Diagnostic> run()
    {
        check_layer_structure();
        for (const FunctionalProcess& p : model_.processes) {
            if (p.movements.empty())
                warn("P1", p.name, p.span, "functional process has no data movements");
            for (const DataMovement& m : p.movements)
                check_movement(p, m);
        }
        check_reuse_ownership();
        check_uses_cycles();
        check_unused();
        if (system_nature(model_) == Nature::classical)
            warn("P3", model_.name, model_.span, "classical-only model; its QCFP size is CFPv5-equivalent");
        sort_diagnostics(out_);
        return std::move(out_);
    }

private:
    void report(Severity severity, std::string_view code, const std::string& subject, const Span& span,
                std::string message)
    {
        out_.push_back(Diagnostic{severity, std::string(code), std::move(message), span, subject});
    }
    void fail(std::string_view code, const std::string& subject, const Span& span, std::string message)
    {
        report(Severity::error, code, subject, span, std::move(message));
    }
    void warn(std::string_view code, const std::string& subject, const Span& span, std::string message)
    {
        report(Severity::warning, code, subject, span, std::move(message));
    }

    Nature nature_of(const Endpoint& e) const
    {
        if (e.kind == EndpointKind::process)
            return process_nature_.at(e.name);
        return endpoint_nature(e, model_);
    }

    static std::string describe(const DataMovement& m)
    {
        return std::string(kind_tag(m.kind)) + " of " + quote(m.data_group);
    }

    static std::string describe(const Endpoint& e)
    {
        return std::string(to_string(e.kind)) + " " + quote(e.name);
    }

    void check_layer_structure()
    {
        if (system_nature(model_) != Nature::quantum)
            return;
        bool classical = false;
        bool quantum = false;
        for (const Layer& layer : model_.layers)
            (layer.nature == Nature::quantum ? quantum : classical) = true;
        if (classical && quantum)
            return;
        std::string missing = !classical && !quantum ? "a classical and a quantum layer"
                              : !classical           ? "a classical layer"
                                                     : "a quantum layer";
        fail("R1", model_.name, model_.span,
             "quantum software system must have at least one classical and one quantum layer (missing " + missing +
                 ")");
    }

    std::optional<std::string> endpoint_problem(const FunctionalProcess& p, const DataMovement& m) const
    {
        const Endpoint& e = m.counterpart;
        const std::string tag(kind_tag(m.kind));
        if (is_storage_kind(m.kind) && e.kind != EndpointKind::storage)
            return tag + " must move data to or from persistent storage, not a " + std::string(to_string(e.kind));
        if (!is_storage_kind(m.kind) && e.kind == EndpointKind::storage)
            return tag + " cannot target persistent storage; use a read or write movement";
        if (is_inbound_kind(m.kind) && e.direction != Direction::from)
            return tag + " moves data into the process and must use 'from'";
        if (!is_inbound_kind(m.kind) && e.direction != Direction::to)
            return tag + " moves data out of the process and must use 'to'";
        if (e.kind == EndpointKind::process && e.name == p.name)
            return "a functional process cannot exchange data movements with itself";
        if (e.kind == EndpointKind::layer && e.name == p.layer)
            return "a functional process cannot exchange data movements with its own layer";
        return std::nullopt;
    }

    void check_movement(const FunctionalProcess& p, const DataMovement& m)
    {
        const Nature group_nature = data_group_nature(*model_.find_data_group(m.data_group));
        const bool quantum_kind = movement_is_quantum(m.kind);

        if (group_nature == Nature::quantum && !quantum_kind)
            fail("R6", p.name, m.span,
                 "quantum data group " + quote(m.data_group) + " must move with a quantum kind, not " +
                     std::string(kind_tag(m.kind)));
        if (group_nature == Nature::classical && quantum_kind && m.conversion == Conversion::none)
            fail("R7", p.name, m.span,
                 "classical data group " + quote(m.data_group) + " must move with a classical kind, not " +
                     std::string(kind_tag(m.kind)));

        if (auto problem = endpoint_problem(p, m)) {
            fail("R2", p.name, m.span, *problem);
            return;
        }

        const Endpoint& e = m.counterpart;
        const Nature layer_nature = model_.find_layer(p.layer)->nature;

        if (e.kind == EndpointKind::storage) {
            const Nature storage = nature_of(e);
            if (storage == Nature::quantum && !quantum_kind)
                fail("R3", p.name, m.span,
                     "quantum storage " + quote(e.name) + " accepts only QR/QW movements, not " +
                         std::string(kind_tag(m.kind)));
            else if (storage == Nature::classical && quantum_kind)
                fail("R3", p.name, m.span,
                     "classical storage " + quote(e.name) + " accepts only R/W movements, not " +
                         std::string(kind_tag(m.kind)));
        }

        if (m.conversion == Conversion::none && quantum_kind) {
            if (layer_nature == Nature::classical)
                fail("R4", p.name, m.span,
                     describe(m) + " reaches a process in classical layer " + quote(p.layer) +
                         "; classical structures only exchange classical data");
            else if (e.kind != EndpointKind::storage && nature_of(e) == Nature::classical)
                fail("R4", p.name, m.span,
                     describe(m) + " reaches classical " + describe(e) +
                         " without conversion; classical structures only exchange classical data");
        }

        if (m.conversion != Conversion::none) {
            const bool prepare = m.conversion == Conversion::state_preparation;
            const MovementKind required = prepare ? MovementKind::qentry : MovementKind::qexit;
            const std::string via = prepare ? "'via prepare'" : "'via measure'";
            if (m.kind != required)
                fail("R5", p.name, m.span,
                     via + " is only allowed on " + std::string(kind_keyword(required)) + ", not " +
                         std::string(kind_keyword(m.kind)));
            else if (layer_nature != Nature::quantum)
                fail("R5", p.name, m.span,
                     via + " requires a process in a quantum layer; " + quote(p.layer) + " is classical");
            else if (nature_of(e) != Nature::classical)
                fail("R5", p.name, m.span,
                     via + (prepare ? " must start at" : " must end at") + " a classical element; " + describe(e) +
                         " is quantum");
        }
    }

    // A movement between two processes belongs to exactly one of them. The
    // later-declared copy of a mirrored pair is the one reported.
    void check_reuse_ownership()
    {
        for (std::size_t j = 0; j < model_.processes.size(); ++j) {
            const FunctionalProcess& later = model_.processes[j];
            for (const DataMovement& m : later.movements) {
                if (m.counterpart.kind != EndpointKind::process)
                    continue;
                auto it = process_index_.find(m.counterpart.name);
                if (it == process_index_.end() || it->second >= j)
                    continue;
                const FunctionalProcess& earlier = model_.processes[it->second];
                for (const DataMovement& other : earlier.movements) {
                    if (other.counterpart.kind == EndpointKind::process && other.counterpart.name == later.name &&
                        other.data_group == m.data_group && mirror_kind(other.kind) == m.kind) {
                        fail("R8", later.name, m.span,
                             describe(m) + " mirrors " + std::string(kind_tag(other.kind)) + " already declared in " +
                                 quote(earlier.name) + "; count it in one process only");
                        break;
                    }
                }
            }
        }
    }

    void check_uses_cycles()
    {
        const std::size_t n = model_.processes.size();
        std::vector<std::vector<std::size_t>> edges(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const std::string& used : model_.processes[i].uses)
                if (auto it = process_index_.find(used); it != process_index_.end())
                    edges[i].push_back(it->second);

        // reach[i][j]: j is reachable from i through at least one edge.
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> stack(edges[i].begin(), edges[i].end());
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                if (reach[i][v])
                    continue;
                reach[i][v] = true;
                for (std::size_t w : edges[v])
                    stack.push_back(w);
            }
        }

        std::vector<bool> reported(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][i] || reported[i])
                continue;
            std::string cycle;
            for (std::size_t j = i; j < n; ++j) {
                if (reach[i][j] && reach[j][i]) {
                    reported[j] = true;
                    cycle += quote(model_.processes[j].name) + " -> ";
                }
            }
            cycle += quote(model_.processes[i].name);
            const FunctionalProcess& p = model_.processes[i];
            fail("R9", p.name, p.span, "cyclic 'uses' relation: " + cycle);
        }
    }

    void check_unused()
    {
        std::set<std::string> layers, users, storages, groups;
        for (const FunctionalProcess& p : model_.processes) {
            layers.insert(p.layer);
            for (const DataMovement& m : p.movements) {
                groups.insert(m.data_group);
                switch (m.counterpart.kind) {
                case EndpointKind::layer:
                    layers.insert(m.counterpart.name);
                    break;
                case EndpointKind::user:
                    users.insert(m.counterpart.name);
                    break;
                case EndpointKind::storage:
                    storages.insert(m.counterpart.name);
                    break;
                case EndpointKind::process:
                    break;
                }
            }
        }
        auto unused = [&](std::string_view category, const auto& list, const std::set<std::string>& used) {
            for (const auto& e : list)
                if (!used.contains(e.name))
                    warn("P2", e.name, e.span, std::string(category) + " is declared but never referenced");
        };
        unused("layer", model_.layers, layers);
        unused("functional user", model_.users, users);
        unused("persistent storage", model_.storages, storages);
        unused("data group", model_.data_groups, groups);
    }

    const Model& model_;
    std::map<std::string, std::size_t> process_index_;
    std::map<std::string, Nature> process_nature_;
    std::vector<Diagnostic> out_;
};

} // namespace

std::vector<Diagnostic> validate(const Model& model)
{
    return Validator(model).run();
}

} // namespace qcosmic
