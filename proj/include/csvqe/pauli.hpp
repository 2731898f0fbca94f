#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csvqe {

/// Fourth root of unity i^k, tracked exactly as an exponent in Z4.
/// Floating-point phases drift over long operator products; this never does.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase from_exponent(int k) { return Phase(((k % 4) + 4) % 4); }
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase imag() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_imag() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return k_ == 0 || k_ == 2; }

  /// +1 or -1; only meaningful when is_real().
  constexpr double real() const { return k_ == 0 ? 1.0 : -1.0; }

  std::complex<double> value() const {
    switch (k_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  constexpr Phase operator*(Phase other) const { return Phase((k_ + other.k_) % 4); }
  constexpr Phase& operator*=(Phase other) {
    k_ = (k_ + other.k_) % 4;
    return *this;
  }
  constexpr bool operator==(const Phase&) const = default;

 private:
  explicit constexpr Phase(int k) : k_(k) {}
  int k_ = 0;
};

/// Pauli string in the symplectic binary representation: one (x, z) bit pair
/// per qubit with I=(0,0), X=(1,0), Z=(0,1), Y=(1,1). The string itself
/// carries no phase; products report their accumulated phase separately.
///
/// Textual form is big-endian over {I,X,Y,Z}: the leftmost character is
/// qubit 0, so "IZ" is Z acting on qubit 1 of a 2-qubit register.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n, 0), z_(n, 0) {}

  static PauliString from_text(std::string_view text);
  /// Single non-identity factor `op` (one of X/Y/Z) at `qubit` on n qubits.
  static PauliString single(std::size_t n, std::size_t qubit, char op);

  std::size_t n() const { return x_.size(); }
  bool x_bit(std::size_t q) const { return x_[q] != 0; }
  bool z_bit(std::size_t q) const { return z_[q] != 0; }

  char factor(std::size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x_[q] | (z_[q] << 1)];
  }
  void set_factor(std::size_t q, char op);

  bool is_identity() const;
  std::size_t weight() const;

  std::string text() const;

  /// Concatenated (x | z) row used by the GF(2) routines.
  std::vector<std::uint8_t> symplectic() const;
  static PauliString from_symplectic(const std::vector<std::uint8_t>& row);

  /// Copy with the listed qubits removed; `sorted_qubits` must be ascending.
  PauliString without_qubits(const std::vector<std::size_t>& sorted_qubits) const;

  bool commutes_with(const PauliString& other) const;
  bool qubitwise_commutes_with(const PauliString& other) const;

  /// Ordering matches lexicographic comparison of text() ('I'<'X'<'Y'<'Z').
  bool operator<(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
};

/// Operator product p*q with its exact phase: multiply(ZI, IZ) = (+1, ZZ).
std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q);

/// Real-weighted Pauli sum (a Hermitian operator, coefficients in Hartree).
/// Terms are kept canonical: duplicates merged, magnitudes below the prune
/// threshold dropped, deterministic iteration order.
class PauliSum {
 public:
  static constexpr double kDefaultPruneThreshold = 1e-12;

  PauliSum() = default;
  explicit PauliSum(std::size_t n, double prune_threshold = kDefaultPruneThreshold)
      : n_(n), prune_threshold_(prune_threshold) {}

  std::size_t n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  double prune_threshold() const { return prune_threshold_; }

  void add_term(const PauliString& p, double coefficient);
  double coefficient(const PauliString& p) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum operator+(const PauliSum& other) const;
  PauliSum scaled(double factor) const;
  PauliSum pruned(double threshold) const;

  /// Scalar (identity-string) part and the sum with it removed.
  double constant_part() const;

  const std::map<PauliString, double>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::vector<PauliString> strings() const;

  bool operator==(const PauliSum& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  std::size_t n_ = 0;
  double prune_threshold_ = kDefaultPruneThreshold;
  std::map<PauliString, double> terms_;
};

}  // namespace csvqe
