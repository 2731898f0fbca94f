#pragma once

#include <complex>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// Dense statevector over 2^n amplitudes. Qubit 0 is the most significant
/// index bit, matching the big-endian textual Pauli convention: basis state
/// |q0 q1 ... q_{n-1}> lives at index q0*2^(n-1) + ... + q_{n-1}.
struct StateVector {
  std::size_t n = 0;
  std::vector<std::complex<double>> amplitudes;

  StateVector() = default;
  explicit StateVector(std::size_t n_qubits);

  static StateVector zero_state(std::size_t n_qubits);
  static StateVector basis_state(std::size_t n_qubits, std::size_t index);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
  void normalize();

  /// Index bit occupied by `qubit` (qubit 0 = most significant).
  std::size_t bit_mask(std::size_t qubit) const {
    return std::size_t{1} << (n - 1 - qubit);
  }
};

/// |out> = P |in>, exact signed-permutation application (no matrices).
StateVector apply_pauli(const PauliString& p, const StateVector& s);

/// |out> = exp(i angle P) |in> = cos(angle) |in> + i sin(angle) P|in>.
StateVector apply_pauli_exponential(const PauliString& p, double angle, const StateVector& s);

/// Real part of <s|H|s>; throws if the imaginary residue exceeds 1e-10
/// or the state is not normalized to 1e-10.
double expectation(const PauliSum& h, const StateVector& s);

/// <s|P|s> for a single string (complex; Hermitian strings give real values).
std::complex<double> expectation(const PauliString& p, const StateVector& s);

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

}  // namespace csvqe
