#include "csvqe/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csvqe {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kCliffordTol = 1e-9;

}  // namespace

bool PauliRotation::is_clifford() const {
  return std::abs(std::abs(angle) - kQuarterPi) < kCliffordTol;
}

PauliRotation rotation_mapping(const PauliString& a, const PauliString& b) {
  if (a.commutes_with(b)) {
    throw std::invalid_argument("rotation_mapping: strings must anticommute");
  }
  auto [ph, axis] = multiply(a, b);
  // i*a*b is Hermitian; fold its +/-1 coefficient into the angle sign.
  const Phase coeff = Phase::imag() * ph;
  return PauliRotation{axis, coeff.real() * kQuarterPi};
}

std::pair<Phase, PauliString> clifford_conjugate(const PauliRotation& r, const PauliString& q) {
  if (!r.is_clifford()) {
    throw std::invalid_argument("clifford_conjugate: rotation angle is not +/- pi/4");
  }
  if (r.axis.commutes_with(q)) return {Phase::one(), q};
  auto [ph, w] = multiply(r.axis, q);
  const Phase sign = r.angle > 0 ? Phase::imag() : Phase::minus_imag();
  return {sign * ph, w};
}

std::pair<Phase, PauliString> clifford_conjugate(const std::vector<PauliRotation>& sequence,
                                                 const PauliString& q) {
  Phase phase = Phase::one();
  PauliString cur = q;
  for (const PauliRotation& r : sequence) {
    auto [ph, next] = clifford_conjugate(r, cur);
    phase *= ph;
    cur = std::move(next);
  }
  return {phase, cur};
}

PauliSum conjugate(const PauliSum& h, const PauliRotation& r) {
  PauliSum out(h.n(), h.prune_threshold());
  const double c2 = std::cos(2.0 * r.angle);
  const double s2 = std::sin(2.0 * r.angle);
  for (const auto& [q, c] : h) {
    if (r.axis.commutes_with(q)) {
      out.add_term(q, c);
      continue;
    }
    if (std::abs(c2) > 1e-15) out.add_term(q, c * c2);
    if (std::abs(s2) > 1e-15) {
      auto [ph, w] = multiply(r.axis, q);
      const Phase coeff = Phase::imag() * ph;
      if (!coeff.is_real()) {
        throw std::logic_error("conjugate: non-real coefficient from anticommuting product");
      }
      out.add_term(w, c * s2 * coeff.real());
    }
  }
  return out;
}

PauliSum conjugate(const PauliSum& h, const std::vector<PauliRotation>& sequence) {
  PauliSum out = h;
  for (const PauliRotation& r : sequence) out = conjugate(out, r);
  return out;
}

std::vector<PauliRotation> inverted(const std::vector<PauliRotation>& sequence) {
  std::vector<PauliRotation> out(sequence.rbegin(), sequence.rend());
  for (PauliRotation& r : out) r.angle = -r.angle;
  return out;
}

StabilizerRotations rotate_to_single_z(const std::vector<PauliString>& stabilizers) {
  StabilizerRotations result;
  if (stabilizers.empty()) return result;
  const std::size_t n = stabilizers.front().n();
  std::vector<bool> used(n, false);

  for (const PauliString& s : stabilizers) {
    if (s.n() != n) throw std::invalid_argument("rotate_to_single_z: qubit count mismatch");
    auto [phase, cur] = clifford_conjugate(result.rotations, s);

    // Fast path: already a single-qubit Z on a free qubit.
    std::size_t direct = n;
    if (cur.weight() == 1) {
      for (std::size_t q = 0; q < n; ++q) {
        if (cur.factor(q) == 'Z' && !used[q]) {
          direct = q;
          break;
        }
      }
    }
    if (direct < n) {
      result.targets.push_back({direct, phase});
      used[direct] = true;
      continue;
    }

    // Prefer a free qubit carrying an X or Y factor: one rotation suffices.
    std::size_t target = n;
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q] && cur.x_bit(q)) {
        target = q;
        break;
      }
    }
    if (target == n) {
      // Pure-Z string: lift one factor to Y first, then fall through.
      std::size_t zq = n;
      for (std::size_t q = 0; q < n; ++q) {
        if (!used[q] && cur.z_bit(q)) {
          zq = q;
          break;
        }
      }
      if (zq == n) {
        throw std::invalid_argument(
            "rotate_to_single_z: stabilizer dependent on earlier targets");
      }
      PauliString lifted = cur;
      lifted.set_factor(zq, 'Y');
      // The product differs from cur only at zq, so the axis is single-qubit.
      const PauliRotation pre{multiply(cur, lifted).second, kQuarterPi};
      result.rotations.push_back(pre);
      auto [ph, next] = clifford_conjugate(pre, cur);
      phase *= ph;
      cur = std::move(next);
      target = zq;
    }

    // Fixed +pi/4 angle; any sign lands in the tracked per-stabilizer phase.
    const PauliRotation rot{multiply(cur, PauliString::single(n, target, 'Z')).second, kQuarterPi};
    result.rotations.push_back(rot);
    auto [ph, next] = clifford_conjugate(rot, cur);
    phase *= ph;
    cur = std::move(next);
    if (cur.factor(target) != 'Z' || cur.weight() != 1) {
      throw std::logic_error("rotate_to_single_z: mapping failed");
    }
    result.targets.push_back({target, phase});
    used[target] = true;
  }
  return result;
}

}  // namespace csvqe
