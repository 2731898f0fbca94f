#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csvqe/circuit.hpp"
#include "csvqe/pauli.hpp"

namespace csvqe {

enum class GroupingMode { qubitwise, general };

std::string to_string(GroupingMode mode);

/// Simultaneously measurable bundle of weighted terms. In qubitwise mode the
/// basis_string covers every member: each member is the basis string with
/// some factors replaced by identity, so single-qubit rotations suffice to
/// measure the whole group.
struct MeasurementGroup {
  GroupingMode mode = GroupingMode::qubitwise;
  std::vector<std::pair<PauliString, double>> members;
  PauliString basis_string;
};

/// Greedy coloring of the conflict graph (edge = pair violating the mode's
/// commutation relation); vertices visited by descending conflict degree,
/// ties broken lexicographically.
std::vector<MeasurementGroup> group(const PauliSum& h, GroupingMode mode = GroupingMode::qubitwise);

/// Per-qubit basis changes mapping the group's basis string onto Z's, so
/// computational-basis outcomes give every member's eigenvalue as a bit
/// parity. Qubitwise groups only.
GateCircuit basis_circuit(const MeasurementGroup& g);

}  // namespace csvqe
