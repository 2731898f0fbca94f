#pragma once

#include <Eigen/Dense>

#include "csvqe/pauli.hpp"
#include "csvqe/state.hpp"

namespace csvqe {

/// Dense matrices above this many qubits are rejected rather than silently
/// slow (2^10 keeps everything in the seconds range on a desktop).
inline constexpr std::size_t kOracleQubitLimit = 10;

/// Full 2^n x 2^n matrix of a Pauli sum. Throws when n exceeds `limit`.
Eigen::MatrixXcd to_matrix(const PauliSum& h, std::size_t limit = kOracleQubitLimit);

Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t limit = kOracleQubitLimit);

struct GroundState {
  double energy = 0.0;
  StateVector state;
};

/// Minimum eigenvalue and a unit eigenvector of the dense matrix.
GroundState exact_ground(const PauliSum& h, std::size_t limit = kOracleQubitLimit);

/// All 2^n eigenvalues in ascending order.
std::vector<double> spectrum(const PauliSum& h, std::size_t limit = kOracleQubitLimit);

}  // namespace csvqe
