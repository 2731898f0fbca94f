#pragma once

#include <utility>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// The unitary exp(i * angle * axis). Sequences are stored in application
/// order: {R1, R2} acts as R2 * R1 on states and conjugates operators as
/// R2 R1 H R1^dag R2^dag.
struct PauliRotation {
  PauliString axis;
  double angle = 0.0;

  bool is_clifford() const;  // |angle| == pi/4 within 1e-9
};

/// Single Clifford rotation mapping string a exactly to string b (no sign),
/// valid whenever a and b anticommute: axis = i*a*b up to the sign folded
/// into the angle.
PauliRotation rotation_mapping(const PauliString& a, const PauliString& b);

/// R q R^dag for a pi/4 rotation: the image is a single string with an exact
/// +/-1 phase. Throws if the rotation is not Clifford.
std::pair<Phase, PauliString> clifford_conjugate(const PauliRotation& r, const PauliString& q);
std::pair<Phase, PauliString> clifford_conjugate(const std::vector<PauliRotation>& sequence,
                                                 const PauliString& q);

/// R h R^dag at arbitrary angle; anticommuting terms split into the usual
/// cos(2t) q + i sin(2t) (axis*q) pair, with exact phase bookkeeping keeping
/// every coefficient real.
PauliSum conjugate(const PauliSum& h, const PauliRotation& r);
PauliSum conjugate(const PauliSum& h, const std::vector<PauliRotation>& sequence);

/// Sequence realizing the inverse unitary: reversed order, negated angles.
std::vector<PauliRotation> inverted(const std::vector<PauliRotation>& sequence);

struct StabilizerTarget {
  std::size_t qubit = 0;
  Phase phase;  // stabilizer maps to phase * Z_qubit; phase is +/-1
};

struct StabilizerRotations {
  std::vector<PauliRotation> rotations;
  std::vector<StabilizerTarget> targets;
};

/// Clifford sequence sending each stabilizer to a single-qubit Z on a
/// distinct qubit. Requires pairwise commuting, GF(2)-independent input;
/// each stabilizer needs at most two pi/4 rotations and later rotations
/// never disturb earlier targets.
StabilizerRotations rotate_to_single_z(const std::vector<PauliString>& stabilizers);

}  // namespace csvqe
