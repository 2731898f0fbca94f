#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

struct ContextualSplit {
  PauliSum h_nc;
  PauliSum h_c;
};

/// How one noncontextual element factors over the generating set: the
/// element equals sign * (product of generators[j] for j in generator_indices)
/// * (representatives[*class_index] when present), phase included.
struct Reconstruction {
  std::vector<std::size_t> generator_indices;
  std::optional<std::size_t> class_index;
  double sign = 1.0;
};

/// The Z u C_1 u ... u C_N structure of a noncontextual set: universal
/// elements commute with everything, classes commute internally and
/// anticommute pairwise. G generates Z together with every product B*A_i
/// (B in C_i), which is what makes the reconstruction map total.
struct NoncontextualStructure {
  std::size_t n = 0;
  std::vector<PauliString> universal;
  std::vector<std::vector<PauliString>> classes;
  std::vector<PauliString> generators;
  std::vector<PauliString> representatives;  // A_i = first element of C_i
  std::map<PauliString, Reconstruction> reconstruction;
};

/// Classical parameters of the noncontextual state: <G_j> = q_j = +/-1 and
/// <A_i> = r_i with |r| = 1.
struct ValueAssignment {
  std::vector<int> q;
  std::vector<double> r;
};

struct NoncontextualSolution {
  ValueAssignment assignment;
  double energy = 0.0;  // E_nc
};

bool is_noncontextual(const std::vector<PauliString>& terms);

enum class SplitStrategy { greedy_magnitude };

/// Greedy split: visit terms in descending |coefficient| (lexicographic
/// tie-break) and admit each into h_nc iff the set stays noncontextual.
ContextualSplit split(const PauliSum& h, SplitStrategy strategy = SplitStrategy::greedy_magnitude);

NoncontextualStructure decompose(const std::vector<PauliString>& terms);

/// E(q, r) under expectation inference: each term contributes
/// coeff * sign * prod q_j * (r_class or 1).
double objective(const NoncontextualStructure& structure, const PauliSum& h_nc,
                 const ValueAssignment& assignment);

inline constexpr std::size_t kDiscreteSearchLimit = 16;

/// Exhaustive over q in {+/-1}^|G|; the objective is linear in r, so the
/// optimal r on the unit sphere is closed-form for any class count.
NoncontextualSolution optimize_noncontextual(const NoncontextualStructure& structure,
                                             const PauliSum& h_nc,
                                             std::size_t discrete_limit = kDiscreteSearchLimit);

}  // namespace csvqe
