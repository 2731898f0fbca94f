#include "csvqe/tapering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "csvqe/gf2.hpp"
#include "csvqe/oracle.hpp"

namespace csvqe {

namespace {

gf2::Matrix symplectic_rows(const std::vector<PauliString>& strings) {
  gf2::Matrix rows;
  rows.reserve(strings.size());
  for (const PauliString& p : strings) rows.push_back(p.symplectic());
  return rows;
}

void check_symmetries(const std::vector<PauliString>& generators, const PauliSum& h) {
  for (const PauliString& g : generators) {
    for (const auto& [term, c] : h) {
      (void)c;
      if (!g.commutes_with(term)) {
        throw std::invalid_argument("tapering: generator " + g.text() +
                                    " does not commute with term " + term.text());
      }
    }
  }
}

}  // namespace

SymmetryBasis find_z2_symmetries(const PauliSum& h) {
  if (h.empty()) throw std::invalid_argument("find_z2_symmetries: empty Hamiltonian");
  const std::size_t n = h.n();
  SymmetryBasis basis;
  if (n == 0) return basis;

  // A candidate (x|z) commutes with every term (x_t|z_t) iff
  // x_t.z + z_t.x = 0, i.e. (x|z) swapped-halves lies in the kernel of the
  // plain term matrix.
  gf2::Matrix terms = symplectic_rows(h.strings());
  gf2::Matrix kernel = gf2::kernel_basis(terms);

  // Swap halves to turn kernel vectors into candidate symmetries, then put
  // the candidate set itself in reduced echelon form for a canonical basis.
  gf2::Matrix candidates;
  for (const gf2::Vec& v : kernel) {
    gf2::Vec swapped(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      swapped[i] = v[n + i];
      swapped[n + i] = v[i];
    }
    candidates.push_back(std::move(swapped));
  }
  gf2::rref(candidates);

  // The kernel is not guaranteed abelian; keep a greedy maximal commuting
  // subset in echelon order.
  for (const gf2::Vec& row : candidates) {
    bool zero = true;
    for (std::uint8_t b : row) {
      if (b) {
        zero = false;
        break;
      }
    }
    if (zero) continue;
    PauliString g = PauliString::from_symplectic(row);
    bool ok = true;
    for (const PauliString& kept : basis.generators) {
      if (!g.commutes_with(kept)) {
        ok = false;
        break;
      }
    }
    if (ok) basis.generators.push_back(std::move(g));
  }
  return basis;
}

SymmetryBasis build_rotations(const SymmetryBasis& basis, const PauliSum& h) {
  if (gf2::rank(symplectic_rows(basis.generators)) != basis.generators.size()) {
    throw std::invalid_argument("build_rotations: generators are not independent");
  }
  check_symmetries(basis.generators, h);

  SymmetryBasis out;
  out.generators = basis.generators;
  StabilizerRotations rot = rotate_to_single_z(out.generators);
  out.clifford_rotations = std::move(rot.rotations);
  for (const StabilizerTarget& t : rot.targets) {
    out.single_qubit_targets.push_back(t.qubit);
    out.target_phases.push_back(t.phase);
  }
  out.rotations_built = true;
  return out;
}

PauliSum taper(const PauliSum& h, const SymmetryBasis& basis, const SectorAssignment& sector) {
  if (!basis.rotations_built && !basis.generators.empty()) {
    throw std::invalid_argument("taper: rotations not built");
  }
  if (sector.values.size() != basis.generators.size()) {
    throw std::invalid_argument("taper: sector length " + std::to_string(sector.values.size()) +
                                " does not match generator count " +
                                std::to_string(basis.generators.size()));
  }
  for (int v : sector.values) {
    if (v != 1 && v != -1) throw std::invalid_argument("taper: sector values must be +1/-1");
  }
  if (basis.generators.empty()) return h;

  const PauliSum rotated = conjugate(h, basis.clifford_rotations);

  // Effective eigenvalue of Z on each target qubit: the recorded phase maps
  // the generator's fixed sector value into the rotated frame.
  const std::size_t k = basis.generators.size();
  std::vector<std::size_t> targets = basis.single_qubit_targets;
  std::vector<double> eigenvalue(h.n(), 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    eigenvalue[basis.single_qubit_targets[j]] =
        basis.target_phases[j].real() * static_cast<double>(sector.values[j]);
  }
  std::sort(targets.begin(), targets.end());

  PauliSum out(h.n() - k, h.prune_threshold());
  for (const auto& [p, c] : rotated) {
    double coeff = c;
    for (std::size_t t : targets) {
      const char f = p.factor(t);
      if (f == 'Z') {
        coeff *= eigenvalue[t];
      } else if (f != 'I') {
        throw std::logic_error("taper: rotated term " + p.text() +
                               " is not diagonal on target qubit " + std::to_string(t));
      }
    }
    out.add_term(p.without_qubits(targets), coeff);
  }
  return out;
}

SectorAssignment select_sector(const PauliSum& h, const SymmetryBasis& basis,
                               SectorStrategy strategy,
                               const std::optional<SectorAssignment>& explicit_sector,
                               std::size_t enumeration_limit) {
  const std::size_t k = basis.generators.size();
  if (strategy == SectorStrategy::explicit_sector) {
    if (!explicit_sector) {
      throw std::invalid_argument("select_sector: explicit strategy needs a sector");
    }
    if (explicit_sector->values.size() != k) {
      throw std::invalid_argument("select_sector: explicit sector length mismatch");
    }
    return *explicit_sector;
  }
  if (k == 0) return {};
  if (k > enumeration_limit) {
    throw std::invalid_argument(
        "select_sector: " + std::to_string(k) + " generators exceed the enumeration limit of " +
        std::to_string(enumeration_limit) + "; pass an explicit sector instead");
  }

  SectorAssignment best;
  double best_energy = 0.0;
  for (std::size_t idx = 0; idx < (std::size_t{1} << k); ++idx) {
    SectorAssignment sector;
    sector.values.resize(k);
    for (std::size_t j = 0; j < k; ++j) sector.values[j] = (idx >> j) & 1 ? -1 : 1;
    const double energy = exact_ground(taper(h, basis, sector)).energy;
    if (best.values.empty() || energy < best_energy) {
      best = std::move(sector);
      best_energy = energy;
    }
  }
  return best;
}

}  // namespace csvqe
