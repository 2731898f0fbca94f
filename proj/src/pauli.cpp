#include "csvqe/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace csvqe {

PauliString PauliString::from_text(std::string_view text) {
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    p.set_factor(q, text[q]);
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char op) {
  if (qubit >= n) {
    throw std::invalid_argument("pauli: qubit index out of range");
  }
  PauliString p(n);
  p.set_factor(qubit, op);
  return p;
}

void PauliString::set_factor(std::size_t q, char op) {
  if (q >= n()) {
    throw std::invalid_argument("pauli: qubit index out of range");
  }
  switch (op) {
    case 'I': x_[q] = 0; z_[q] = 0; break;
    case 'X': x_[q] = 1; z_[q] = 0; break;
    case 'Z': x_[q] = 0; z_[q] = 1; break;
    case 'Y': x_[q] = 1; z_[q] = 1; break;
    default:
      throw std::invalid_argument(std::string("pauli: invalid factor '") + op + "'");
  }
}

bool PauliString::is_identity() const {
  for (std::size_t q = 0; q < n(); ++q) {
    if (x_[q] || z_[q]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < n(); ++q) {
    if (x_[q] || z_[q]) ++w;
  }
  return w;
}

std::string PauliString::text() const {
  std::string s(n(), 'I');
  for (std::size_t q = 0; q < n(); ++q) {
    s[q] = factor(q);
  }
  return s;
}

std::vector<std::uint8_t> PauliString::symplectic() const {
  std::vector<std::uint8_t> row;
  row.reserve(2 * n());
  row.insert(row.end(), x_.begin(), x_.end());
  row.insert(row.end(), z_.begin(), z_.end());
  return row;
}

PauliString PauliString::from_symplectic(const std::vector<std::uint8_t>& row) {
  if (row.size() % 2 != 0) {
    throw std::invalid_argument("pauli: symplectic row length must be even");
  }
  const std::size_t n = row.size() / 2;
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.x_[q] = row[q] ? 1 : 0;
    p.z_[q] = row[n + q] ? 1 : 0;
  }
  return p;
}

PauliString PauliString::without_qubits(const std::vector<std::size_t>& sorted_qubits) const {
  std::size_t next_valid = 0;
  for (const std::size_t q : sorted_qubits) {
    if (q >= n() || q < next_valid) {
      throw std::invalid_argument("pauli: deletion list must be ascending qubit indices");
    }
    next_valid = q + 1;
  }
  PauliString out(n() - sorted_qubits.size());
  std::size_t skip = 0;
  std::size_t w = 0;
  for (std::size_t q = 0; q < n(); ++q) {
    if (skip < sorted_qubits.size() && sorted_qubits[skip] == q) {
      ++skip;
      continue;
    }
    out.x_[w] = x_[q];
    out.z_[w] = z_[q];
    ++w;
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n() != other.n()) {
    throw std::invalid_argument("pauli: qubit counts differ");
  }
  int sym = 0;
  for (std::size_t q = 0; q < n(); ++q) {
    sym ^= (x_[q] & other.z_[q]) ^ (z_[q] & other.x_[q]);
  }
  return sym == 0;
}

bool PauliString::qubitwise_commutes_with(const PauliString& other) const {
  if (n() != other.n()) {
    throw std::invalid_argument("pauli: qubit counts differ");
  }
  for (std::size_t q = 0; q < n(); ++q) {
    const char a = factor(q);
    const char b = other.factor(q);
    if (a != 'I' && b != 'I' && a != b) return false;
  }
  return true;
}

bool PauliString::operator<(const PauliString& other) const {
  if (n() != other.n()) return n() < other.n();
  for (std::size_t q = 0; q < n(); ++q) {
    const char a = factor(q);
    const char b = other.factor(q);
    if (a != b) return a < b;
  }
  return false;
}

std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("pauli: qubit counts differ");
  }
  PauliString out(p.n());
  // Per qubit, with a Pauli written as i^(x z) X^x Z^z, the product picks up
  // i^(x1 z1 + x2 z2 - x3 z3) from re-normalising Y factors and (-1)^(z1 x2)
  // from commuting Z past X.
  int exponent = 0;
  for (std::size_t k = 0; k < p.n(); ++k) {
    const int x1 = p.x_bit(k), z1 = p.z_bit(k);
    const int x2 = q.x_bit(k), z2 = q.z_bit(k);
    const int x3 = x1 ^ x2, z3 = z1 ^ z2;
    exponent += x1 * z1 + x2 * z2 - x3 * z3 + 2 * (z1 * x2);
    if (x3 && z3) out.set_factor(k, 'Y');
    else if (x3) out.set_factor(k, 'X');
    else if (z3) out.set_factor(k, 'Z');
  }
  return {Phase::from_exponent(exponent), out};
}

void PauliSum::add_term(const PauliString& p, double coefficient) {
  if (p.n() != n_) {
    throw std::invalid_argument("pauli_sum: qubit counts differ");
  }
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (std::abs(coefficient) >= prune_threshold_ || prune_threshold_ == 0.0) {
      if (coefficient != 0.0) terms_.emplace(p, coefficient);
    }
    return;
  }
  it->second += coefficient;
  if (std::abs(it->second) < prune_threshold_) {
    terms_.erase(it);
  }
}

double PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("pauli_sum: qubit counts differ");
  }
  for (const auto& [p, c] : other.terms_) {
    add_term(p, c);
  }
  return *this;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  PauliSum out = *this;
  out += other;
  return out;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(n_, prune_threshold_);
  for (const auto& [p, c] : terms_) {
    out.add_term(p, c * factor);
  }
  return out;
}

PauliSum PauliSum::pruned(double threshold) const {
  PauliSum out(n_, prune_threshold_);
  for (const auto& [p, c] : terms_) {
    if (std::abs(c) >= threshold) out.add_term(p, c);
  }
  return out;
}

double PauliSum::constant_part() const {
  return coefficient(PauliString(n_));
}

std::vector<PauliString> PauliSum::strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) {
    out.push_back(p);
  }
  return out;
}

}  // namespace csvqe
