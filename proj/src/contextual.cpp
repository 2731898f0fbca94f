#include "csvqe/contextual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "csvqe/gf2.hpp"

namespace csvqe {

namespace {

void check_uniform(const std::vector<PauliString>& terms) {
  for (const PauliString& t : terms) {
    if (t.n() != terms.front().n()) {
      throw std::invalid_argument("contextual: mixed qubit counts in term set");
    }
  }
}

/// Indices of elements commuting with every other element (the set Z).
std::vector<bool> universal_mask(const std::vector<PauliString>& terms) {
  std::vector<bool> mask(terms.size(), true);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (i != j && !terms[i].commutes_with(terms[j])) {
        mask[i] = false;
        break;
      }
    }
  }
  return mask;
}

/// Partition of the non-universal remainder into commuting classes; empty
/// result with ok=false when the remainder is not an equivalence structure.
struct ClassPartition {
  bool ok = true;
  std::vector<std::vector<PauliString>> classes;
};

ClassPartition partition_remainder(const std::vector<PauliString>& remainder) {
  ClassPartition out;
  for (const PauliString& t : remainder) {
    std::size_t home = out.classes.size();
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
      if (t.commutes_with(out.classes[c].front())) {
        home = c;
        break;
      }
    }
    if (home == out.classes.size()) {
      out.classes.push_back({t});
      continue;
    }
    out.classes[home].push_back(t);
  }
  // Validate: intra-class commutation, inter-class anticommutation. This is
  // exactly transitivity of the commutation relation on the remainder.
  for (std::size_t a = 0; a < out.classes.size() && out.ok; ++a) {
    for (const PauliString& p : out.classes[a]) {
      for (std::size_t b = 0; b < out.classes.size() && out.ok; ++b) {
        for (const PauliString& q : out.classes[b]) {
          if (p == q) continue;
          const bool expect_commute = (a == b);
          if (p.commutes_with(q) != expect_commute) out.ok = false;
        }
      }
    }
  }
  return out;
}

}  // namespace

bool is_noncontextual(const std::vector<PauliString>& terms) {
  if (terms.empty()) return true;
  check_uniform(terms);
  const std::vector<bool> universal = universal_mask(terms);
  std::vector<PauliString> remainder;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!universal[i]) remainder.push_back(terms[i]);
  }
  return partition_remainder(remainder).ok;
}

ContextualSplit split(const PauliSum& h, SplitStrategy strategy) {
  if (h.empty()) throw std::invalid_argument("split: empty Hamiltonian");
  if (strategy != SplitStrategy::greedy_magnitude) {
    throw std::invalid_argument("split: unknown strategy");
  }

  std::vector<std::pair<PauliString, double>> order(h.begin(), h.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.second) != std::abs(b.second)) return std::abs(a.second) > std::abs(b.second);
    return a.first < b.first;
  });

  ContextualSplit out{PauliSum(h.n(), h.prune_threshold()), PauliSum(h.n(), h.prune_threshold())};
  std::vector<PauliString> admitted;
  for (const auto& [p, c] : order) {
    admitted.push_back(p);
    if (is_noncontextual(admitted)) {
      out.h_nc.add_term(p, c);
    } else {
      admitted.pop_back();
      out.h_c.add_term(p, c);
    }
  }
  return out;
}

NoncontextualStructure decompose(const std::vector<PauliString>& terms) {
  if (!is_noncontextual(terms)) {
    throw std::invalid_argument("decompose: term set is contextual");
  }
  NoncontextualStructure s;
  if (terms.empty()) return s;
  s.n = terms.front().n();

  std::vector<PauliString> sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<bool> universal = universal_mask(sorted);
  std::vector<PauliString> remainder;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    (universal[i] ? s.universal : remainder).push_back(sorted[i]);
  }
  s.classes = partition_remainder(remainder).classes;
  for (const auto& cls : s.classes) s.representatives.push_back(cls.front());

  // Generator candidates: Z itself plus every B*A_i; all of these commute
  // with the whole of S_nc, and G must generate them all for the
  // reconstruction map to close.
  std::vector<PauliString> candidates;
  for (const PauliString& z : s.universal) {
    if (!z.is_identity()) candidates.push_back(z);
  }
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    for (const PauliString& b : s.classes[i]) {
      PauliString prod = multiply(b, s.representatives[i]).second;
      if (!prod.is_identity()) candidates.push_back(std::move(prod));
    }
  }
  gf2::Matrix rows;
  for (const PauliString& c : candidates) rows.push_back(c.symplectic());
  for (std::size_t idx : gf2::independent_rows(rows)) {
    s.generators.push_back(candidates[idx]);
  }

  gf2::Matrix gen_rows;
  for (const PauliString& g : s.generators) gen_rows.push_back(g.symplectic());

  for (const PauliString& t : sorted) {
    Reconstruction rec;
    // Class members factor through B = (B*A_i) * A_i; universal elements
    // factor over G alone.
    std::optional<std::size_t> cls;
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      if (std::find(s.classes[i].begin(), s.classes[i].end(), t) != s.classes[i].end()) {
        cls = i;
        break;
      }
    }
    gf2::Vec target = t.symplectic();
    if (cls) {
      const gf2::Vec rep = s.representatives[*cls].symplectic();
      for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= rep[i];
      rec.class_index = cls;
    }
    const auto combo = gf2::solve_combination(gen_rows, target);
    if (!combo) throw std::logic_error("decompose: generator set does not span " + t.text());
    for (std::size_t j = 0; j < combo->size(); ++j) {
      if ((*combo)[j]) rec.generator_indices.push_back(j);
    }

    // Exact sign so that t == sign * prod(G_j) * (A_i)?
    Phase phase = Phase::one();
    PauliString acc(s.n);
    for (std::size_t j : rec.generator_indices) {
      auto [ph, next] = multiply(acc, s.generators[j]);
      phase *= ph;
      acc = std::move(next);
    }
    if (rec.class_index) {
      auto [ph, next] = multiply(acc, s.representatives[*rec.class_index]);
      phase *= ph;
      acc = std::move(next);
    }
    if (!(acc == t) || !phase.is_real()) {
      throw std::logic_error("decompose: reconstruction failed for " + t.text());
    }
    rec.sign = phase.real();
    s.reconstruction.emplace(t, std::move(rec));
  }
  return s;
}

double objective(const NoncontextualStructure& structure, const PauliSum& h_nc,
                 const ValueAssignment& assignment) {
  if (assignment.q.size() != structure.generators.size()) {
    throw std::invalid_argument("objective: q length does not match generator count");
  }
  if (assignment.r.size() != structure.classes.size()) {
    throw std::invalid_argument("objective: r length does not match class count");
  }
  double energy = 0.0;
  for (const auto& [p, c] : h_nc) {
    const auto it = structure.reconstruction.find(p);
    if (it == structure.reconstruction.end()) {
      throw std::invalid_argument("objective: term " + p.text() + " missing from structure");
    }
    const Reconstruction& rec = it->second;
    double value = rec.sign;
    for (std::size_t j : rec.generator_indices) value *= assignment.q[j];
    if (rec.class_index) value *= assignment.r[*rec.class_index];
    energy += c * value;
  }
  return energy;
}

NoncontextualSolution optimize_noncontextual(const NoncontextualStructure& structure,
                                             const PauliSum& h_nc, std::size_t discrete_limit) {
  const std::size_t m = structure.generators.size();
  const std::size_t nc = structure.classes.size();
  if (m > discrete_limit) {
    throw std::invalid_argument(
        "optimize_noncontextual: " + std::to_string(m) +
        " generators exceed the exhaustive limit of " + std::to_string(discrete_limit) +
        "; a simulated-annealing fallback would be needed at this scale");
  }

  NoncontextualSolution best;
  bool have_best = false;
  for (std::size_t idx = 0; idx < (std::size_t{1} << m); ++idx) {
    ValueAssignment a;
    a.q.resize(m);
    for (std::size_t j = 0; j < m; ++j) a.q[j] = (idx >> j) & 1 ? -1 : 1;

    // E(q, r) = base(q) + m(q) . r is linear in r, so the constrained
    // optimum over |r| = 1 is r = -m/|m| with value base - |m|.
    double base = 0.0;
    std::vector<double> mvec(nc, 0.0);
    for (const auto& [p, c] : h_nc) {
      const Reconstruction& rec = structure.reconstruction.at(p);
      double value = rec.sign;
      for (std::size_t j : rec.generator_indices) value *= a.q[j];
      if (rec.class_index) {
        mvec[*rec.class_index] += c * value;
      } else {
        base += c * value;
      }
    }
    double norm = 0.0;
    for (double v : mvec) norm += v * v;
    norm = std::sqrt(norm);

    a.r.assign(nc, 0.0);
    if (nc > 0) {
      if (norm > 0.0) {
        for (std::size_t i = 0; i < nc; ++i) a.r[i] = -mvec[i] / norm;
      } else {
        a.r[0] = 1.0;
      }
    }
    const double energy = base - norm;
    if (!have_best || energy < best.energy) {
      best.assignment = std::move(a);
      best.energy = energy;
      have_best = true;
    }
  }
  if (!have_best) throw std::logic_error("optimize_noncontextual: no assignment evaluated");
  return best;
}

}  // namespace csvqe
