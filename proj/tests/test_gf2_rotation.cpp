#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "csvqe/gf2.hpp"
#include "csvqe/rotation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using csvqe::PauliRotation;
using csvqe::PauliString;
using csvqe::PauliSum;
using csvqe::Phase;
namespace gf2 = csvqe::gf2;

namespace {

gf2::Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  gf2::Matrix m(rows, gf2::Vec(cols, 0));
  for (auto& row : m)
    for (auto& bit : row) bit = static_cast<std::uint8_t>(gen() & 1);
  return m;
}

gf2::Vec multiply_mod2(const gf2::Matrix& m, const gf2::Vec& v) {
  gf2::Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc ^= static_cast<std::uint8_t>(m[i][j] & v[j]);
    out[i] = acc;
  }
  return out;
}

bool is_rref(const gf2::Matrix& m, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (r > 0 && pivots[r] <= pivots[r - 1]) return false;
    for (std::size_t j = 0; j < pivots[r]; ++j)
      if (m[r][j] != 0) return false;
    if (m[r][pivots[r]] != 1) return false;
    for (std::size_t other = 0; other < m.size(); ++other)
      if (other != r && m[other][pivots[r]] != 0) return false;
  }
  // Rows past the pivot count must be all zero.
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    for (const auto bit : m[r])
      if (bit != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rref produces reduced echelon form and rank counts pivots") {
  auto gen = oracles::rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + gen() % 6;
    const std::size_t cols = 1 + gen() % 7;
    gf2::Matrix m = random_matrix(gen, rows, cols);
    const gf2::Matrix original = m;
    const auto pivots = gf2::rref(m);
    CHECK(is_rref(m, pivots));
    CHECK(gf2::rank(original) == pivots.size());
    // Row operations preserve the row space: every reduced row solves as a
    // combination of the originals and vice versa.
    for (const auto& row : m) {
      const bool zero = std::all_of(row.begin(), row.end(), [](std::uint8_t b) { return b == 0; });
      if (!zero) CHECK(gf2::solve_combination(original, row).has_value());
    }
  }
}

TEST_CASE("kernel basis vectors annihilate the matrix and span the kernel") {
  auto gen = oracles::rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen() % 5;
    const std::size_t cols = 1 + gen() % 7;
    const gf2::Matrix m = random_matrix(gen, rows, cols);
    const gf2::Matrix basis = gf2::kernel_basis(m);
    CHECK(basis.size() == cols - gf2::rank(m));
    for (const auto& v : basis) {
      const auto image = multiply_mod2(m, v);
      CHECK(std::all_of(image.begin(), image.end(), [](std::uint8_t b) { return b == 0; }));
    }
    if (!basis.empty()) CHECK(gf2::rank(basis) == basis.size());
  }
}

TEST_CASE("solve_combination reproduces targets inside the row space and rejects outside") {
  auto gen = oracles::rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen() % 5;
    const std::size_t cols = 1 + gen() % 6;
    const gf2::Matrix m = random_matrix(gen, rows, cols);

    // A random combination of rows must always be solvable, and the returned
    // coefficients must reproduce it exactly.
    gf2::Vec target(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
      if (gen() & 1)
        for (std::size_t j = 0; j < cols; ++j) target[j] ^= m[i][j];
    const auto coeffs = gf2::solve_combination(m, target);
    REQUIRE(coeffs.has_value());
    REQUIRE(coeffs->size() == rows);
    gf2::Vec rebuilt(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
      if ((*coeffs)[i])
        for (std::size_t j = 0; j < cols; ++j) rebuilt[j] ^= m[i][j];
    CHECK(rebuilt == target);
  }

  // {100, 010} cannot produce 001.
  const gf2::Matrix m = {{1, 0, 0}, {0, 1, 0}};
  CHECK_FALSE(gf2::solve_combination(m, {0, 0, 1}).has_value());
  CHECK(gf2::solve_combination(m, {1, 1, 0}).has_value());
}

TEST_CASE("independent_rows keeps a maximal independent subset, earliest first") {
  const gf2::Matrix m = {
      {1, 0, 0},
      {0, 1, 0},
      {1, 1, 0},  // sum of the first two
      {0, 0, 1},
      {1, 0, 1},  // dependent again
  };
  CHECK(gf2::independent_rows(m) == std::vector<std::size_t>{0, 1, 3});

  auto gen = oracles::rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const gf2::Matrix r = random_matrix(gen, 1 + gen() % 6, 1 + gen() % 6);
    const auto keep = gf2::independent_rows(r);
    CHECK(keep.size() == gf2::rank(r));
    gf2::Matrix kept;
    for (const auto i : keep) kept.push_back(r[i]);
    if (!kept.empty()) CHECK(gf2::rank(kept) == kept.size());
  }
}

TEST_CASE("clifford_conjugate matches dense conjugation by exp(i pi/4 P)") {
  auto gen = oracles::rng(35);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 1 + gen() % 4;
    const PauliString axis = oracles::random_string(gen, n);
    const PauliString q = oracles::random_string(gen, n);
    if (axis.is_identity()) continue;
    const double sign = (gen() & 1) ? 1.0 : -1.0;
    const PauliRotation r{axis, sign * std::numbers::pi / 4.0};
    const auto [phase, image] = csvqe::clifford_conjugate(r, q);
    REQUIRE(phase.is_real());

    const Eigen::MatrixXcd u = oracles::dense_exponential(axis, r.angle);
    const Eigen::MatrixXcd expected = u * oracles::dense(q) * u.adjoint();
    const Eigen::MatrixXcd got = phase.value() * oracles::dense(image);
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
    ++checked;
  }

  CHECK_THROWS_AS(
      csvqe::clifford_conjugate(PauliRotation{PauliString::from_text("X"), 0.3},
                                PauliString::from_text("Z")),
      std::invalid_argument);
}

TEST_CASE("rotation_mapping sends a to exactly +b for anticommuting pairs") {
  auto gen = oracles::rng(36);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 1 + gen() % 4;
    const PauliString a = oracles::random_string(gen, n);
    const PauliString b = oracles::random_string(gen, n);
    if (a.commutes_with(b)) continue;
    const PauliRotation r = csvqe::rotation_mapping(a, b);
    CHECK(r.is_clifford());
    const auto [phase, image] = csvqe::clifford_conjugate(r, a);
    CHECK(phase == Phase::one());
    CHECK(image.text() == b.text());
    ++checked;
  }
}

TEST_CASE("generic-angle conjugation of a sum matches dense U H U^dag") {
  auto gen = oracles::rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + gen() % 3;
    PauliString axis = oracles::random_string(gen, n);
    if (axis.is_identity()) axis = PauliString::from_text(std::string(n - 1, 'I') + "X");
    const double angle = (static_cast<double>(gen() >> 11) * 0x1.0p-53) * 4.0 - 2.0;
    const PauliSum h = oracles::random_sum(gen, n, 2 + gen() % 6);
    const PauliSum rotated = csvqe::conjugate(h, PauliRotation{axis, angle});

    const Eigen::MatrixXcd u = oracles::dense_exponential(axis, angle);
    const Eigen::MatrixXcd expected = u * oracles::dense(h) * u.adjoint();
    CHECK((expected - oracles::dense(rotated)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("a sequence followed by its inverse is the identity map") {
  auto gen = oracles::rng(38);
  const std::size_t n = 3;
  std::vector<PauliRotation> sequence;
  for (int i = 0; i < 4; ++i) {
    PauliString axis = oracles::random_string(gen, n);
    if (axis.is_identity()) axis = PauliString::from_text("XYZ");
    sequence.push_back({axis, (static_cast<double>(gen() >> 11) * 0x1.0p-53) * 3.0 - 1.5});
  }
  const PauliSum h = oracles::random_sum(gen, n, 6);
  PauliSum roundtrip = csvqe::conjugate(csvqe::conjugate(h, sequence), csvqe::inverted(sequence));
  roundtrip += h.scaled(-1.0);
  for (const auto& [p, c] : roundtrip.terms()) {
    (void)p;
    CHECK(std::abs(c) < 1e-12);
  }
}

TEST_CASE("rotate_to_single_z maps stabilizers to distinct signed Z factors") {
  auto check_set = [](const std::vector<PauliString>& stabilizers) {
    const auto result = csvqe::rotate_to_single_z(stabilizers);
    REQUIRE(result.targets.size() == stabilizers.size());
    std::vector<std::size_t> qubits;
    for (std::size_t i = 0; i < stabilizers.size(); ++i) {
      const auto [phase, image] = csvqe::clifford_conjugate(result.rotations, stabilizers[i]);
      const auto& target = result.targets[i];
      CHECK(phase == target.phase);
      CHECK(target.phase.is_real());
      // The image must be Z on exactly the reported qubit.
      std::string expected(stabilizers[i].n(), 'I');
      expected[target.qubit] = 'Z';
      CHECK(image.text() == expected);
      qubits.push_back(target.qubit);
    }
    std::sort(qubits.begin(), qubits.end());
    CHECK(std::adjacent_find(qubits.begin(), qubits.end()) == qubits.end());
  };

  check_set({PauliString::from_text("XX"), PauliString::from_text("ZZ")});
  check_set({PauliString::from_text("ZIZ"), PauliString::from_text("IZZ")});
  check_set({PauliString::from_text("ZZZZ")});

  // Random commuting independent sets: build from disjoint single-qubit
  // seeds conjugated by a random Clifford-like sequence, which preserves
  // commutation and independence.
  auto gen = oracles::rng(39);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + gen() % 2;
    const std::size_t count = 1 + gen() % n;
    std::vector<PauliString> seeds;
    for (std::size_t i = 0; i < count; ++i) {
      std::string text(n, 'I');
      text[i] = 'Z';
      seeds.push_back(PauliString::from_text(text));
    }
    std::vector<PauliRotation> scramble;
    for (int i = 0; i < 3; ++i) {
      PauliString axis = oracles::random_string(gen, n);
      if (axis.is_identity()) continue;
      scramble.push_back({axis, std::numbers::pi / 4.0});
    }
    std::vector<PauliString> stabilizers;
    for (const auto& seed : seeds)
      stabilizers.push_back(csvqe::clifford_conjugate(scramble, seed).second);
    check_set(stabilizers);
  }

  // Dependent input must be rejected: ZZ, plus ZZ again.
  CHECK_THROWS_AS(
      csvqe::rotate_to_single_z({PauliString::from_text("ZZ"), PauliString::from_text("ZZ")}),
      std::invalid_argument);
}
