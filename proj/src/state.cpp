#include "csvqe/state.hpp"

#include <cmath>
#include <stdexcept>

namespace csvqe {

StateVector::StateVector(std::size_t n_qubits)
    : n(n_qubits), amplitudes(std::size_t{1} << n_qubits, {0.0, 0.0}) {}

StateVector StateVector::zero_state(std::size_t n_qubits) {
  StateVector s(n_qubits);
  s.amplitudes[0] = 1.0;
  return s;
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw std::invalid_argument("state: basis index out of range");
  }
  s.amplitudes[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) {
    throw std::runtime_error("state: cannot normalize the zero vector");
  }
  for (auto& a : amplitudes) {
    a /= nrm;
  }
}

StateVector apply_pauli(const PauliString& p, const StateVector& s) {
  if (p.n() != s.n) {
    throw std::invalid_argument("state: qubit counts differ");
  }
  StateVector out(s.n);
  // Plain index bit permutation plus per-qubit factors:
  //   X flips the bit; Z contributes (-1)^bit; Y flips and contributes
  //   i*(-1)^bit (from Y|0> = i|1>, Y|1> = -i|0>).
  std::size_t flip_mask = 0;
  for (std::size_t q = 0; q < p.n(); ++q) {
    if (p.x_bit(q)) flip_mask |= s.bit_mask(q);
  }
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    std::complex<double> v = s.amplitudes[idx];
    if (v == std::complex<double>{0.0, 0.0}) continue;
    for (std::size_t q = 0; q < p.n(); ++q) {
      const bool bit = idx & s.bit_mask(q);
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
    out.amplitudes[idx ^ flip_mask] += v;
  }
  return out;
}

StateVector apply_pauli_exponential(const PauliString& p, double angle, const StateVector& s) {
  StateVector ps = apply_pauli(p, s);
  StateVector out(s.n);
  const double c = std::cos(angle);
  const std::complex<double> is = {0.0, std::sin(angle)};
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    out.amplitudes[idx] = c * s.amplitudes[idx] + is * ps.amplitudes[idx];
  }
  return out;
}

std::complex<double> expectation(const PauliString& p, const StateVector& s) {
  StateVector ps = apply_pauli(p, s);
  return inner_product(s, ps);
}

double expectation(const PauliSum& h, const StateVector& s) {
  if (h.n() != s.n) {
    throw std::invalid_argument("state: qubit counts differ");
  }
  if (std::abs(s.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("state: expectation requires a normalized state");
  }
  std::complex<double> acc = 0.0;
  for (const auto& [p, c] : h) {
    acc += c * expectation(p, s);
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("state: expectation has nonreal residue");
  }
  return acc.real();
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("state: qubit counts differ");
  }
  std::complex<double> acc = 0.0;
  for (std::size_t idx = 0; idx < a.dim(); ++idx) {
    acc += std::conj(a.amplitudes[idx]) * b.amplitudes[idx];
  }
  return acc;
}

}  // namespace csvqe
