#include <stdexcept>

#include "csvqe/grouping.hpp"
#include "csvqe/oracle.hpp"
#include "csvqe/simulator.hpp"
#include "doctest.h"
#include "oracles.hpp"

using csvqe::GroupingMode;
using csvqe::MeasurementGroup;
using csvqe::PauliString;
using csvqe::PauliSum;

TEST_CASE("the canonical qubitwise triple lands in one group") {
  PauliSum h(4);
  h.add_term(PauliString::from_text("XIXI"), 0.5);
  h.add_term(PauliString::from_text("IXIX"), 0.25);
  h.add_term(PauliString::from_text("IIXX"), -0.75);
  const auto groups = csvqe::group(h, GroupingMode::qubitwise);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].members.size() == 3);
  CHECK(groups[0].basis_string.text() == "XXXX");
}

TEST_CASE("ZZ and XX commute globally but not qubitwise") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("ZZ"), 1.0);
  h.add_term(PauliString::from_text("XX"), 0.5);
  CHECK(csvqe::group(h, GroupingMode::qubitwise).size() == 2);
  CHECK(csvqe::group(h, GroupingMode::general).size() == 1);
}

TEST_CASE("groups satisfy the mode's commutation relation and cover the sum") {
  auto gen = oracles::rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + gen() % 4;
    const PauliSum h = oracles::random_sum(gen, n, 4 + gen() % 10);
    if (h.empty()) continue;
    for (const auto mode : {GroupingMode::qubitwise, GroupingMode::general}) {
      const auto groups = csvqe::group(h, mode);
      CHECK(groups.size() <= h.size());

      std::size_t covered = 0;
      PauliSum reassembled(n);
      for (const auto& g : groups) {
        covered += g.members.size();
        for (std::size_t a = 0; a < g.members.size(); ++a) {
          reassembled.add_term(g.members[a].first, g.members[a].second);
          for (std::size_t b = a + 1; b < g.members.size(); ++b) {
            if (mode == GroupingMode::qubitwise) {
              CHECK(g.members[a].first.qubitwise_commutes_with(g.members[b].first));
            } else {
              CHECK(g.members[a].first.commutes_with(g.members[b].first));
            }
          }
          if (mode == GroupingMode::qubitwise) {
            // Every member embeds in the basis string.
            for (std::size_t q = 0; q < n; ++q) {
              const char f = g.members[a].first.factor(q);
              if (f != 'I') CHECK(f == g.basis_string.factor(q));
            }
          }
        }
      }
      CHECK(covered == h.size());
      reassembled += h.scaled(-1.0);
      CHECK(reassembled.empty());
    }
  }
}

TEST_CASE("grouping is deterministic") {
  auto gen = oracles::rng(72);
  const PauliSum h = oracles::random_sum(gen, 4, 12);
  const auto a = csvqe::group(h, GroupingMode::qubitwise);
  const auto b = csvqe::group(h, GroupingMode::qubitwise);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].members.size() == b[i].members.size());
    for (std::size_t j = 0; j < a[i].members.size(); ++j) {
      CHECK(a[i].members[j].first.text() == b[i].members[j].first.text());
    }
  }
}

TEST_CASE("basis_circuit rotates every member onto the computational basis") {
  auto gen = oracles::rng(73);
  int done = 0;
  while (done < 20) {
    const std::size_t n = 1 + gen() % 3;
    const PauliSum h = oracles::random_sum(gen, n, 2 + gen() % 5);
    if (h.empty()) continue;
    for (const auto& g : csvqe::group(h, GroupingMode::qubitwise)) {
      const csvqe::GateCircuit circuit = csvqe::basis_circuit(g);
      // Dense unitary of the basis-change circuit.
      const std::size_t dim = std::size_t{1} << n;
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
      for (std::size_t col = 0; col < dim; ++col) {
        const auto out =
            csvqe::run_gate(circuit, csvqe::StateVector::basis_state(n, col));
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = out.amplitudes[row];
      }
      // U P U^dag must be the member's string with X/Y replaced by Z.
      for (const auto& [p, c] : g.members) {
        (void)c;
        std::string diag = p.text();
        for (char& f : diag)
          if (f == 'X' || f == 'Y') f = 'Z';
        const Eigen::MatrixXcd expected = oracles::dense(PauliString::from_text(diag));
        const Eigen::MatrixXcd got = u * oracles::dense(p) * u.adjoint();
        CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
      }
      ++done;
    }
  }
}

TEST_CASE("basis_circuit rejects general groups and group rejects empty sums") {
  MeasurementGroup g;
  g.mode = GroupingMode::general;
  CHECK_THROWS_AS(csvqe::basis_circuit(g), std::invalid_argument);
  CHECK_THROWS_AS(csvqe::group(PauliSum(2)), std::invalid_argument);
}
