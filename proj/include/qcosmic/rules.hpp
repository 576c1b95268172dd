#pragma once

#include "qcosmic/diagnostic.hpp"
#include "qcosmic/model.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace qcosmic {

/// Validator rule codes. R-rules are errors, P-rules are warnings.
inline constexpr std::array<std::string_view, 12> rule_codes = {
    "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "P1", "P2", "P3",
};

/// Checks a resolved model against the rule catalog:
///
///   R1  a quantum system has at least one classical and one quantum layer
///   R2  movement endpoints: storage kinds talk to storage, E/X/QE/QX to a
///       user, process or layer; inbound kinds use `from`, outbound `to`;
///       no movement targets its own process or layer
///   R3  quantum storage takes only QR/QW, classical storage only R/W
///   R4  a classical structure exchanges no quantum data without conversion
///   R5  `via prepare` only on a qentry from a classical element into a
///       quantum-layer process; `via measure` only on a qexit from one
///   R6  a quantum data group moves with a quantum kind
///   R7  a classical data group moves with a classical kind unless converted
///   R8  an inter-process movement is declared by exactly one process
///   R9  the `uses` relation is acyclic
///   P1  empty functional process
///   P2  declaration never referenced
///   P3  classical-only model: size is CFPv5-equivalent
///
/// The result is sorted by source position, then code. Throws ReferenceError
/// if the model holds a dangling reference.
std::vector<Diagnostic> validate(const Model& model);

} // namespace qcosmic
