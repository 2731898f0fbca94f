#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace csvqe {

/// One gate: a single-qubit rotation exp(-i*angle/2 * sigma_axis) or a CNOT.
struct GateOp {
  enum class Kind { rotation, cnot };
  Kind kind = Kind::rotation;
  char axis = 'Z';      // 'X' | 'Y' | 'Z' (rotation only)
  std::size_t q0 = 0;   // rotation qubit, or CNOT control
  std::size_t q1 = 0;   // CNOT target
  double angle = 0.0;   // rotation only

  static GateOp rotation(char axis, std::size_t qubit, double angle) {
    return {Kind::rotation, axis, qubit, 0, angle};
  }
  static GateOp cnot(std::size_t control, std::size_t target) {
    return {Kind::cnot, 'I', control, target, 0.0};
  }
};

struct TimingTable {
  std::size_t rotation_dt = 32;
  std::size_t cnot_dt = 144;
};

TimingTable load_timing_table(const std::filesystem::path& path);

struct GateCircuit {
  std::size_t n = 0;
  std::vector<GateOp> ops;
  std::size_t duration_dt = 0;  // critical-path length under the timing table
};

/// ASAP-scheduled critical path: ops claim their qubits in program order,
/// rotations on distinct qubits overlap, a CNOT serializes both its qubits.
std::size_t duration_of(const GateCircuit& c, const TimingTable& table = {});

}  // namespace csvqe
