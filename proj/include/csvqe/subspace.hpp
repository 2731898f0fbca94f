#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "csvqe/contextual.hpp"
#include "csvqe/pauli.hpp"
#include "csvqe/rotation.hpp"

namespace csvqe {

/// Data for the anticommuting-class composite observable sum_i r_i A_i,
/// enforced as a stabilizer by first rotating it onto A_1 (unitary
/// partitioning), then treating A_1 like any other stabilizer.
struct CompositeObservable {
  std::vector<PauliString> representatives;
  std::vector<double> r;
};

struct SubspaceSpec {
  std::size_t n = 0;
  /// Enforced stabilizers with their fixed eigenvalues, in enforcement
  /// order. When the composite is enforced, its entry is (A_1, +1) — the
  /// observable after the unitary-partitioning rotation.
  std::vector<std::pair<PauliString, int>> stabilizers;
  std::optional<CompositeObservable> composite;  // set iff composite enforced
  /// U_W as Pauli exponentials: continuous composite rotations first, then
  /// +pi/4 Cliffords onto single-qubit Z's. Filled by build_u_w.
  std::vector<PauliRotation> rotation_sequence;
  std::vector<std::pair<std::size_t, int>> fixed_qubits;  // (qubit, eigenvalue) in rotated frame
  std::size_t n_reduced = 0;
  bool built = false;
};

struct ReducedProblem {
  PauliSum h_c_reduced;
  double constant_shift = 0.0;
};

/// Importance score of a candidate stabilizer: total |coefficient| of h_c
/// terms anticommuting with it (for the composite, of the
/// unitary-partitioning-rotated h_c terms anticommuting with A_1).
/// choose_stabilizers enforces the n - n_target lowest-scoring candidates,
/// so sweeps over n_target enforce nested stabilizer prefixes.
SubspaceSpec choose_stabilizers(const NoncontextualSolution& solution,
                                const NoncontextualStructure& structure, const PauliSum& h_c,
                                std::size_t n_target);

/// Givens-style rotation sweep taking sum_i r_i A_i onto A_1.
std::vector<PauliRotation> unitary_partitioning_rotations(const CompositeObservable& composite);

/// Fills rotation_sequence and fixed_qubits.
SubspaceSpec build_u_w(const SubspaceSpec& spec);

/// Conjugate by U_W, drop terms anticommuting with a fixed qubit's Z,
/// substitute eigenvalues, delete fixed qubits; identity remnants accumulate
/// in constant_shift.
ReducedProblem project(const PauliSum& h_c, const SubspaceSpec& spec);

}  // namespace csvqe
