#include "csvqe/oracle.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace csvqe {

namespace {

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw std::invalid_argument("oracle: " + std::to_string(n) +
                                " qubits exceeds the dense oracle limit of " +
                                std::to_string(limit));
  }
}

}  // namespace

Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t limit) {
  check_limit(p.n(), limit);
  const std::size_t dim = std::size_t{1} << p.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::size_t flip_mask = 0;
  for (std::size_t q = 0; q < p.n(); ++q) {
    if (p.x_bit(q)) flip_mask |= std::size_t{1} << (p.n() - 1 - q);
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::complex<double> v = 1.0;
    for (std::size_t q = 0; q < p.n(); ++q) {
      const bool bit = col & (std::size_t{1} << (p.n() - 1 - q));
      switch (p.factor(q)) {
        case 'Z':
          if (bit) v = -v;
          break;
        case 'Y':
          v *= bit ? std::complex<double>{0.0, -1.0} : std::complex<double>{0.0, 1.0};
          break;
        default:
          break;
      }
    }
    m(col ^ flip_mask, col) = v;
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliSum& h, std::size_t limit) {
  check_limit(h.n(), limit);
  const std::size_t dim = std::size_t{1} << h.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : h) {
    m += c * to_matrix(p, limit);
  }
  return m;
}

GroundState exact_ground(const PauliSum& h, std::size_t limit) {
  const Eigen::MatrixXcd m = to_matrix(h, limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("oracle: eigensolver failed to converge");
  }
  GroundState out;
  out.energy = solver.eigenvalues()(0);
  out.state.n = h.n();
  out.state.amplitudes.resize(m.rows());
  const auto vec = solver.eigenvectors().col(0);
  for (Eigen::Index i = 0; i < vec.size(); ++i) {
    out.state.amplitudes[static_cast<std::size_t>(i)] = vec(i);
  }
  out.state.normalize();
  return out;
}

std::vector<double> spectrum(const PauliSum& h, std::size_t limit) {
  const Eigen::MatrixXcd m = to_matrix(h, limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("oracle: eigensolver failed to converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

}  // namespace csvqe
