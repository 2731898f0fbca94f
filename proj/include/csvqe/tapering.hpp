#pragma once

#include <optional>
#include <vector>

#include "csvqe/pauli.hpp"
#include "csvqe/rotation.hpp"

namespace csvqe {

/// Z2 symmetries of a Hamiltonian together with the Clifford rotations that
/// turn each generator into a single-qubit Z. All rotation angles are +pi/4;
/// sign bookkeeping lives in target_phases: under the full rotation
/// sequence, generators[j] maps to target_phases[j] * Z on
/// single_qubit_targets[j].
struct SymmetryBasis {
  std::vector<PauliString> generators;
  std::vector<std::size_t> single_qubit_targets;
  std::vector<PauliRotation> clifford_rotations;
  std::vector<Phase> target_phases;
  bool rotations_built = false;
};

struct SectorAssignment {
  std::vector<int> values;  // +1/-1 eigenvalue per generator
};

/// Pauli strings commuting with every term of h: the kernel, under the
/// symplectic product, of the term matrix, restricted greedily to a pairwise
/// commuting subset (the full kernel need not be abelian). Deterministic:
/// candidates come from the reduced echelon form of the kernel.
SymmetryBasis find_z2_symmetries(const PauliSum& h);

/// Fills clifford_rotations / single_qubit_targets / target_phases.
/// h is used to re-validate that the generators are symmetries.
SymmetryBasis build_rotations(const SymmetryBasis& basis, const PauliSum& h);

/// Rotate h, substitute each target qubit's Z by the sector eigenvalue, and
/// delete the target qubits; result acts on n - k qubits.
PauliSum taper(const PauliSum& h, const SymmetryBasis& basis, const SectorAssignment& sector);

enum class SectorStrategy { exhaustive, explicit_sector };

inline constexpr std::size_t kSectorEnumerationLimit = 8;

/// Exhaustive strategy diagonalizes the tapered Hamiltonian in every sector
/// and keeps the lowest; explicit strategy returns the supplied sector.
SectorAssignment select_sector(const PauliSum& h, const SymmetryBasis& basis,
                               SectorStrategy strategy,
                               const std::optional<SectorAssignment>& explicit_sector = {},
                               std::size_t enumeration_limit = kSectorEnumerationLimit);

}  // namespace csvqe
