#include <map>
#include <stdexcept>

#include "csvqe/pauli.hpp"
#include "doctest.h"
#include "oracles.hpp"

using csvqe::PauliString;
using csvqe::PauliSum;
using csvqe::Phase;
using csvqe::multiply;

TEST_CASE("phase arithmetic is exact in Z4") {
  CHECK(Phase::one() * Phase::one() == Phase::one());
  CHECK(Phase::imag() * Phase::imag() == Phase::minus_one());
  CHECK(Phase::imag() * Phase::minus_imag() == Phase::one());
  CHECK(Phase::from_exponent(7) == Phase::minus_imag());
  CHECK(Phase::from_exponent(-1) == Phase::minus_imag());
  CHECK(Phase::minus_one().real() == -1.0);
  CHECK(Phase::imag().value() == std::complex<double>(0.0, 1.0));
  CHECK_FALSE(Phase::imag().is_real());
}

TEST_CASE("text round trip and factor access") {
  const PauliString p = PauliString::from_text("IXYZ");
  CHECK(p.text() == "IXYZ");
  CHECK(p.n() == 4);
  CHECK(p.factor(0) == 'I');
  CHECK(p.factor(1) == 'X');
  CHECK(p.factor(2) == 'Y');
  CHECK(p.factor(3) == 'Z');
  CHECK(p.weight() == 3);
  CHECK(PauliString(3).text() == "III");
  CHECK(PauliString::single(4, 2, 'Y').text() == "IIYI");

  CHECK_THROWS_AS(PauliString::from_text("IXQZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::single(3, 3, 'X'), std::invalid_argument);
}

TEST_CASE("single-qubit products carry the textbook phases") {
  const auto xy = multiply(PauliString::from_text("X"), PauliString::from_text("Y"));
  CHECK(xy.first == Phase::imag());
  CHECK(xy.second.text() == "Z");

  const auto yx = multiply(PauliString::from_text("Y"), PauliString::from_text("X"));
  CHECK(yx.first == Phase::minus_imag());
  CHECK(yx.second.text() == "Z");

  const auto xz = multiply(PauliString::from_text("X"), PauliString::from_text("Z"));
  CHECK(xz.first == Phase::minus_imag());
  CHECK(xz.second.text() == "Y");

  const auto yy = multiply(PauliString::from_text("Y"), PauliString::from_text("Y"));
  CHECK(yy.first == Phase::one());
  CHECK(yy.second.text() == "I");
}

TEST_CASE("ZI times IZ is plus ZZ") {
  const auto [phase, product] =
      multiply(PauliString::from_text("ZI"), PauliString::from_text("IZ"));
  CHECK(phase == Phase::one());
  CHECK(product.text() == "ZZ");
}

TEST_CASE("products match dense Kronecker arithmetic on random strings") {
  auto gen = oracles::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 4;
    const PauliString a = oracles::random_string(gen, n);
    const PauliString b = oracles::random_string(gen, n);
    const auto [phase, product] = multiply(a, b);
    const Eigen::MatrixXcd expected = oracles::dense(a) * oracles::dense(b);
    const Eigen::MatrixXcd got = phase.value() * oracles::dense(product);
    CHECK((expected - got).cwiseAbs().maxCoeff() == 0.0);  // entries are exact units
  }
}

TEST_CASE("commutation agrees with the dense commutator") {
  auto gen = oracles::rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 4;
    const PauliString a = oracles::random_string(gen, n);
    const PauliString b = oracles::random_string(gen, n);
    const Eigen::MatrixXcd comm =
        oracles::dense(a) * oracles::dense(b) - oracles::dense(b) * oracles::dense(a);
    CHECK(a.commutes_with(b) == (comm.cwiseAbs().maxCoeff() == 0.0));
  }
}

TEST_CASE("IZ and XI commute, IZ and XX do not") {
  CHECK(PauliString::from_text("IZ").commutes_with(PauliString::from_text("XI")));
  CHECK_FALSE(PauliString::from_text("IZ").commutes_with(PauliString::from_text("XX")));
}

TEST_CASE("qubitwise commutation requires per-qubit compatibility") {
  const PauliString a = PauliString::from_text("XIXI");
  const PauliString b = PauliString::from_text("IXIX");
  const PauliString c = PauliString::from_text("IIXX");
  CHECK(a.qubitwise_commutes_with(b));
  CHECK(a.qubitwise_commutes_with(c));
  CHECK(b.qubitwise_commutes_with(c));
  // ZZ and XX commute globally but not qubitwise.
  const PauliString zz = PauliString::from_text("ZZ");
  const PauliString xx = PauliString::from_text("XX");
  CHECK(zz.commutes_with(xx));
  CHECK_FALSE(zz.qubitwise_commutes_with(xx));
}

TEST_CASE("qubitwise commutation implies commutation on random pairs") {
  auto gen = oracles::rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 5;
    const PauliString a = oracles::random_string(gen, n);
    const PauliString b = oracles::random_string(gen, n);
    if (a.qubitwise_commutes_with(b)) CHECK(a.commutes_with(b));
  }
}

TEST_CASE("without_qubits deletes the requested positions") {
  const PauliString p = PauliString::from_text("XYZIZ");
  CHECK(p.without_qubits({1, 3}).text() == "XZZ");
  CHECK(p.without_qubits({}).text() == "XYZIZ");
  CHECK_THROWS_AS(p.without_qubits({5}), std::invalid_argument);
  CHECK_THROWS_AS(p.without_qubits({2, 1}), std::invalid_argument);
}

TEST_CASE("symplectic round trip preserves the string") {
  auto gen = oracles::rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString p = oracles::random_string(gen, 1 + gen() % 6);
    CHECK(PauliString::from_symplectic(p.symplectic()) == p);
  }
}

TEST_CASE("sums merge duplicates and prune cancellations") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("XZ"), 0.5);
  h.add_term(PauliString::from_text("XZ"), 0.25);
  CHECK(h.size() == 1);
  CHECK(h.coefficient(PauliString::from_text("XZ")) == 0.75);

  h.add_term(PauliString::from_text("XZ"), -0.75);
  CHECK(h.empty());

  h.add_term(PauliString::from_text("ZZ"), 1e-15);  // below the prune threshold
  CHECK(h.empty());
}

TEST_CASE("sum arithmetic: addition, scaling, constant part") {
  PauliSum a(2);
  a.add_term(PauliString::from_text("II"), -1.5);
  a.add_term(PauliString::from_text("ZI"), 0.5);
  PauliSum b(2);
  b.add_term(PauliString::from_text("ZI"), 0.5);
  b.add_term(PauliString::from_text("XX"), 0.25);

  const PauliSum sum = a + b;
  CHECK(sum.size() == 3);
  CHECK(sum.coefficient(PauliString::from_text("ZI")) == 1.0);
  CHECK(sum.constant_part() == -1.5);
  CHECK(sum.scaled(2.0).coefficient(PauliString::from_text("XX")) == 0.5);
  CHECK(sum.pruned(0.3).size() == 2);  // XX drops

  CHECK_THROWS_AS(a.add_term(PauliString::from_text("X"), 1.0), std::invalid_argument);
}

TEST_CASE("sum term order is deterministic and lexicographic-friendly") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("ZZ"), 1.0);
  h.add_term(PauliString::from_text("IX"), 1.0);
  h.add_term(PauliString::from_text("XI"), 1.0);
  const auto strings = h.strings();
  REQUIRE(strings.size() == 3);
  std::map<PauliString, int> order;
  for (std::size_t i = 0; i < strings.size(); ++i) order[strings[i]] = static_cast<int>(i);
  for (std::size_t i = 1; i < strings.size(); ++i) CHECK(strings[i - 1] < strings[i]);
}
