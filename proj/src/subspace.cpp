#include "csvqe/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace csvqe {

namespace {

double anticommuting_weight(const PauliSum& h, const PauliString& candidate) {
  double score = 0.0;
  for (const auto& [p, c] : h) {
    if (!candidate.commutes_with(p)) score += std::abs(c);
  }
  return score;
}

}  // namespace

std::vector<PauliRotation> unitary_partitioning_rotations(const CompositeObservable& composite) {
  const std::size_t nc = composite.representatives.size();
  if (composite.r.size() != nc) {
    throw std::invalid_argument("unitary_partitioning: r length mismatch");
  }
  std::vector<PauliRotation> rotations;
  if (nc < 2) return rotations;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = i + 1; j < nc; ++j) {
      if (composite.representatives[i].commutes_with(composite.representatives[j])) {
        throw std::invalid_argument("unitary_partitioning: representatives must anticommute");
      }
    }
  }

  // Sweep components 2..N into the first: each step zeroes one r_i while
  // accumulating the norm onto r_1. Axis P_i = i*A_i*A_1 is Hermitian since
  // distinct-class representatives anticommute; its +/-1 coefficient folds
  // into the angle.
  double v1 = composite.r[0];
  for (std::size_t i = 1; i < nc; ++i) {
    const double vi = composite.r[i];
    const double two_theta = std::atan2(vi, v1);
    v1 = std::hypot(v1, vi);
    if (std::abs(two_theta) < 1e-15) continue;
    auto [ph, axis] = multiply(composite.representatives[i], composite.representatives[0]);
    const Phase coeff = Phase::imag() * ph;
    if (!coeff.is_real()) {
      throw std::invalid_argument("unitary_partitioning: representatives must anticommute");
    }
    rotations.push_back({axis, coeff.real() * two_theta / 2.0});
  }
  return rotations;
}

SubspaceSpec choose_stabilizers(const NoncontextualSolution& solution,
                                const NoncontextualStructure& structure, const PauliSum& h_c,
                                std::size_t n_target) {
  const std::size_t n = structure.n;
  if (n_target > n) {
    throw std::invalid_argument("choose_stabilizers: n_target " + std::to_string(n_target) +
                                " exceeds qubit count " + std::to_string(n));
  }
  const std::size_t want = n - n_target;
  const bool have_composite = !structure.classes.empty();
  const std::size_t available = structure.generators.size() + (have_composite ? 1 : 0);
  if (want > available) {
    throw std::invalid_argument("choose_stabilizers: n_target " + std::to_string(n_target) +
                                " needs " + std::to_string(want) + " stabilizers but only " +
                                std::to_string(available) + " are available");
  }

  struct Candidate {
    PauliString op;
    int eigenvalue = 1;
    bool composite = false;
    double score = 0.0;
  };
  std::vector<Candidate> candidates;
  for (std::size_t j = 0; j < structure.generators.size(); ++j) {
    candidates.push_back({structure.generators[j], solution.assignment.q[j], false,
                          anticommuting_weight(h_c, structure.generators[j])});
  }
  CompositeObservable composite;
  if (have_composite) {
    composite.representatives = structure.representatives;
    composite.r = solution.assignment.r;
    // <sum_i r_i A_i> = |r|^2 = 1 on the noncontextual state; after the
    // unitary-partitioning rotation the candidate is A_1 with eigenvalue +1,
    // scored against h_c expressed in that same frame.
    const PauliSum rotated = conjugate(h_c, unitary_partitioning_rotations(composite));
    candidates.push_back({structure.representatives[0], 1, true,
                          anticommuting_weight(rotated, structure.representatives[0])});
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.op < b.op;
  });

  SubspaceSpec spec;
  spec.n = n;
  spec.n_reduced = n_target;
  for (std::size_t i = 0; i < want; ++i) {
    spec.stabilizers.emplace_back(candidates[i].op, candidates[i].eigenvalue);
    if (candidates[i].composite) spec.composite = composite;
  }
  return spec;
}

SubspaceSpec build_u_w(const SubspaceSpec& spec) {
  for (std::size_t a = 0; a < spec.stabilizers.size(); ++a) {
    for (std::size_t b = a + 1; b < spec.stabilizers.size(); ++b) {
      if (!spec.stabilizers[a].first.commutes_with(spec.stabilizers[b].first)) {
        throw std::invalid_argument("build_u_w: stabilizers " + spec.stabilizers[a].first.text() +
                                    " and " + spec.stabilizers[b].first.text() +
                                    " do not commute");
      }
    }
  }
  SubspaceSpec out = spec;
  out.rotation_sequence.clear();
  out.fixed_qubits.clear();
  if (out.composite) {
    out.rotation_sequence = unitary_partitioning_rotations(*out.composite);
  }

  std::vector<PauliString> ops;
  for (const auto& [op, eig] : out.stabilizers) ops.push_back(op);
  StabilizerRotations cliffords = rotate_to_single_z(ops);
  out.rotation_sequence.insert(out.rotation_sequence.end(), cliffords.rotations.begin(),
                               cliffords.rotations.end());
  for (std::size_t j = 0; j < cliffords.targets.size(); ++j) {
    const int eig = static_cast<int>(cliffords.targets[j].phase.real()) * out.stabilizers[j].second;
    out.fixed_qubits.emplace_back(cliffords.targets[j].qubit, eig);
  }
  out.built = true;
  return out;
}

ReducedProblem project(const PauliSum& h_c, const SubspaceSpec& spec) {
  if (!spec.built && !spec.stabilizers.empty()) {
    throw std::invalid_argument("project: rotation sequence not built");
  }
  if (h_c.n() != spec.n) {
    throw std::invalid_argument("project: Hamiltonian qubit count mismatch");
  }

  const PauliSum rotated = conjugate(h_c, spec.rotation_sequence);

  std::vector<std::size_t> fixed;
  std::vector<double> eigenvalue(spec.n, 1.0);
  for (const auto& [q, e] : spec.fixed_qubits) {
    fixed.push_back(q);
    eigenvalue[q] = e;
  }
  std::sort(fixed.begin(), fixed.end());

  ReducedProblem out;
  out.h_c_reduced = PauliSum(spec.n_reduced, h_c.prune_threshold());
  for (const auto& [p, c] : rotated) {
    double coeff = c;
    bool dropped = false;
    for (std::size_t q : fixed) {
      const char f = p.factor(q);
      if (f == 'X' || f == 'Y') {
        // Anticommutes with the fixed Z: the two-sided projection kills it.
        dropped = true;
        break;
      }
      if (f == 'Z') coeff *= eigenvalue[q];
    }
    if (dropped) continue;
    const PauliString reduced = p.without_qubits(fixed);
    if (reduced.is_identity()) {
      out.constant_shift += coeff;
    } else {
      out.h_c_reduced.add_term(reduced, coeff);
    }
  }
  return out;
}

}  // namespace csvqe
