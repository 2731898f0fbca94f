#include "csvqe/grouping.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace csvqe {

std::string to_string(GroupingMode mode) {
  return mode == GroupingMode::qubitwise ? "qubitwise" : "general";
}

std::vector<MeasurementGroup> group(const PauliSum& h, GroupingMode mode) {
  if (h.empty()) throw std::invalid_argument("group: empty Hamiltonian");

  std::vector<std::pair<PauliString, double>> terms(h.begin(), h.end());
  const auto conflicts = [&](const PauliString& a, const PauliString& b) {
    return mode == GroupingMode::qubitwise ? !a.qubitwise_commutes_with(b) : !a.commutes_with(b);
  };

  std::vector<std::size_t> degree(terms.size(), 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (conflicts(terms[i].first, terms[j].first)) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return terms[a].first < terms[b].first;
  });

  std::vector<MeasurementGroup> groups;
  for (std::size_t idx : order) {
    const auto& [p, c] = terms[idx];
    MeasurementGroup* home = nullptr;
    for (MeasurementGroup& g : groups) {
      bool ok = true;
      for (const auto& [q, qc] : g.members) {
        (void)qc;
        if (conflicts(p, q)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        home = &g;
        break;
      }
    }
    if (!home) {
      groups.push_back({mode, {}, PauliString(h.n())});
      home = &groups.back();
    }
    home->members.emplace_back(p, c);
  }

  if (mode == GroupingMode::qubitwise) {
    for (MeasurementGroup& g : groups) {
      PauliString basis(h.n());
      for (const auto& [p, c] : g.members) {
        (void)c;
        for (std::size_t q = 0; q < h.n(); ++q) {
          if (p.factor(q) != 'I') basis.set_factor(q, p.factor(q));
        }
      }
      g.basis_string = std::move(basis);
    }
  }
  return groups;
}

GateCircuit basis_circuit(const MeasurementGroup& g) {
  if (g.mode != GroupingMode::qubitwise) {
    throw std::invalid_argument(
        "basis_circuit: only qubitwise groups have single-qubit measurement bases");
  }
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  GateCircuit circuit;
  circuit.n = g.basis_string.n();
  for (std::size_t q = 0; q < circuit.n; ++q) {
    switch (g.basis_string.factor(q)) {
      case 'X':
        circuit.ops.push_back(GateOp::rotation('Y', q, -kHalfPi));
        break;
      case 'Y':
        circuit.ops.push_back(GateOp::rotation('X', q, kHalfPi));
        break;
      default:
        break;
    }
  }
  circuit.duration_dt = duration_of(circuit);
  return circuit;
}

}  // namespace csvqe
