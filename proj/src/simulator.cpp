#include "csvqe/simulator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace csvqe {

namespace {

using cd = std::complex<double>;

// Row-major 2x2 of exp(-i angle/2 sigma_axis).
std::array<cd, 4> rotation_matrix(char axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (axis) {
    case 'X':
      return {cd(c, 0), cd(0, -s), cd(0, -s), cd(c, 0)};
    case 'Y':
      return {cd(c, 0), cd(-s, 0), cd(s, 0), cd(c, 0)};
    case 'Z':
      return {cd(c, -s), cd(0, 0), cd(0, 0), cd(c, s)};
    default:
      throw std::invalid_argument(std::string("unknown rotation axis '") + axis + "'");
  }
}

void apply_single(StateVector& s, std::size_t qubit, const std::array<cd, 4>& m) {
  const std::size_t mask = s.bit_mask(qubit);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i & mask) continue;
    const cd v0 = s.amplitudes[i];
    const cd v1 = s.amplitudes[i | mask];
    s.amplitudes[i] = m[0] * v0 + m[1] * v1;
    s.amplitudes[i | mask] = m[2] * v0 + m[3] * v1;
  }
}

void apply_cnot(StateVector& s, std::size_t control, std::size_t target) {
  const std::size_t cmask = s.bit_mask(control);
  const std::size_t tmask = s.bit_mask(target);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(s.amplitudes[i], s.amplitudes[i | tmask]);
  }
}

// Applies a dense unitary on the listed qubits (ascending); the first listed
// qubit is the most significant local index bit, matching the global layout.
void apply_local_unitary(StateVector& s, const std::vector<std::size_t>& qubits,
                         const Eigen::MatrixXcd& u) {
  const std::size_t m = qubits.size();
  const std::size_t ldim = std::size_t{1} << m;
  std::vector<std::size_t> pattern(ldim, 0);
  std::size_t comp_mask = 0;
  for (std::size_t i = 0; i < m; ++i) comp_mask |= s.bit_mask(qubits[i]);
  for (std::size_t li = 0; li < ldim; ++li) {
    for (std::size_t i = 0; i < m; ++i) {
      if ((li >> (m - 1 - i)) & 1u) pattern[li] |= s.bit_mask(qubits[i]);
    }
  }
  Eigen::VectorXcd in(ldim);
  for (std::size_t g = 0; g < s.dim(); ++g) {
    if (g & comp_mask) continue;
    for (std::size_t li = 0; li < ldim; ++li) in(static_cast<Eigen::Index>(li)) = s.amplitudes[g | pattern[li]];
    Eigen::VectorXcd out = u * in;
    for (std::size_t li = 0; li < ldim; ++li) s.amplitudes[g | pattern[li]] = out(static_cast<Eigen::Index>(li));
  }
}

double envelope_value(const PulseInstruction& in, double tau) {
  if (in.envelope == PulseInstruction::Envelope::square) return 1.0;
  const double d = static_cast<double>(in.duration_dt);
  const double edge = std::min(static_cast<double>(kPulseQuantum), d / 4.0);
  const double sigma = edge / 2.0;
  double u = 0.0;
  if (tau < edge) {
    u = tau - edge;
  } else if (tau > d - edge) {
    u = tau - (d - edge);
  } else {
    return 1.0;
  }
  return std::exp(-u * u / (2.0 * sigma * sigma));
}

double gaussian_integral(double a, double b, double center, double sigma) {
  const double root2_sigma = sigma * std::numbers::sqrt2;
  return sigma * std::sqrt(std::numbers::pi / 2.0) *
         (std::erf((b - center) / root2_sigma) - std::erf((a - center) / root2_sigma));
}

/// Mean of the envelope over [a, b], relative to the instruction start.
/// Averaging (rather than midpoint-sampling) makes every fixed-axis
/// instruction integrate to the same unitary at any step size; only genuine
/// noncommutation between channels is left to step refinement.
double envelope_average(const PulseInstruction& in, double a, double b) {
  if (in.envelope == PulseInstruction::Envelope::square) return 1.0;
  const double d = static_cast<double>(in.duration_dt);
  const double edge = std::min(static_cast<double>(kPulseQuantum), d / 4.0);
  const double sigma = edge / 2.0;
  double integral = 0.0;
  const double rise_hi = std::min(b, edge);
  if (a < rise_hi) integral += gaussian_integral(a, rise_hi, edge, sigma);
  const double flat_lo = std::max(a, edge);
  const double flat_hi = std::min(b, d - edge);
  if (flat_lo < flat_hi) integral += flat_hi - flat_lo;
  const double fall_lo = std::max(a, d - edge);
  if (fall_lo < b) integral += gaussian_integral(fall_lo, b, d - edge, sigma);
  return integral / (b - a);
}

void validate_schedule(const PulseSchedule& s, const DeviceModel& d) {
  if (s.n == 0) throw std::invalid_argument("pulse schedule needs at least one qubit");
  if (s.n > d.n) throw std::invalid_argument("pulse schedule does not fit the device");
  for (const PulseInstruction& in : s.instructions) {
    if (in.q0 >= s.n || (in.q1 && *in.q1 >= s.n)) {
      throw std::out_of_range("pulse instruction qubit out of range");
    }
    if (in.duration_dt == 0 || in.duration_dt % kPulseQuantum != 0) {
      throw std::invalid_argument("pulse durations must be positive multiples of " +
                                  std::to_string(kPulseQuantum) + " dt");
    }
    if (!(in.amplitude >= 0.0 && in.amplitude <= 1.0)) {
      throw std::invalid_argument("pulse amplitude must lie in [0, 1]");
    }
    if (!(std::abs(in.angle) <= std::numbers::pi + 1e-12)) {
      throw std::invalid_argument("pulse angle must lie in [-pi, pi]");
    }
    if (in.q1) {
      if (*in.q1 == in.q0) throw std::invalid_argument("cross-resonance needs two distinct qubits");
      if (in.detuning != 0.0) {
        throw std::invalid_argument("detuning applies to single-qubit channels only");
      }
      const bool coupled = std::any_of(
          d.coupling_pairs.begin(), d.coupling_pairs.end(), [&](const auto& pr) {
            return (pr.first == in.q0 && pr.second == *in.q1) ||
                   (pr.first == *in.q1 && pr.second == in.q0);
          });
      if (!coupled) {
        throw std::invalid_argument("cross-resonance on uncoupled qubits (" +
                                    std::to_string(in.q0) + ", " + std::to_string(*in.q1) + ")");
      }
    }
  }
}

struct QubitComponents {
  std::vector<std::size_t> parent;

  explicit QubitComponents(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

StateVector run_gate(const GateCircuit& c, const StateVector& initial) {
  if (c.n != initial.n) throw std::invalid_argument("circuit and state widths differ");
  StateVector s = initial;
  for (const GateOp& op : c.ops) {
    if (op.q0 >= c.n || (op.kind == GateOp::Kind::cnot && op.q1 >= c.n)) {
      throw std::out_of_range("gate qubit index out of range");
    }
    if (op.kind == GateOp::Kind::rotation) {
      apply_single(s, op.q0, rotation_matrix(op.axis, op.angle));
    } else {
      if (op.q0 == op.q1) throw std::invalid_argument("CNOT needs two distinct qubits");
      apply_cnot(s, op.q0, op.q1);
    }
  }
  return s;
}

GateCircuit build_su2_ansatz(std::size_t n, std::size_t layers, const std::vector<double>& params,
                             const TimingTable& table) {
  if (n == 0) throw std::invalid_argument("ansatz needs at least one qubit");
  const std::size_t expected = 2 * n * (layers + 1);
  if (params.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " ansatz parameters, got " +
                                std::to_string(params.size()));
  }
  GateCircuit c;
  c.n = n;
  std::size_t p = 0;
  const auto rotation_block = [&] {
    for (std::size_t q = 0; q < n; ++q) c.ops.push_back(GateOp::rotation('Y', q, params[p++]));
    for (std::size_t q = 0; q < n; ++q) c.ops.push_back(GateOp::rotation('Z', q, params[p++]));
  };
  rotation_block();
  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (std::size_t q = 0; q + 1 < n; ++q) c.ops.push_back(GateOp::cnot(q, q + 1));
    rotation_block();
  }
  c.duration_dt = duration_of(c, table);
  return c;
}

DeviceModel default_device_model(std::size_t n) {
  DeviceModel d;
  d.n = n;
  for (std::size_t q = 0; q + 1 < n; ++q) d.coupling_pairs.emplace_back(q, q + 1);
  return d;
}

DeviceModel load_device_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open device model " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  DeviceModel d;
  try {
    d.n = doc.at("n").get<std::size_t>();
    if (d.n == 0) throw std::runtime_error(path.string() + ": device needs at least one qubit");
    if (doc.contains("coupling_pairs")) {
      for (const auto& pr : doc.at("coupling_pairs")) {
        const auto a = pr.at(0).get<std::size_t>();
        const auto b = pr.at(1).get<std::size_t>();
        if (a >= d.n || b >= d.n || a == b) {
          throw std::runtime_error(path.string() + ": bad coupling pair");
        }
        d.coupling_pairs.emplace_back(a, b);
      }
    } else {
      d.coupling_pairs = default_device_model(d.n).coupling_pairs;
    }
    d.rabi_rate_per_amplitude = doc.value("rabi_rate_per_amplitude", d.rabi_rate_per_amplitude);
    d.cr_rate_per_amplitude = doc.value("cr_rate_per_amplitude", d.cr_rate_per_amplitude);
    d.dt_seconds = doc.value("dt_seconds", d.dt_seconds);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (d.rabi_rate_per_amplitude <= 0 || d.cr_rate_per_amplitude <= 0 || d.dt_seconds <= 0) {
    throw std::runtime_error(path.string() + ": rates and dt must be positive");
  }
  return d;
}

StateVector run_pulse(const PulseSchedule& s, const DeviceModel& d, const StateVector& initial,
                      double step_dt) {
  if (initial.n != s.n) throw std::invalid_argument("schedule and state widths differ");
  if (!(step_dt > 0.0)) throw std::invalid_argument("step_dt must be positive");
  validate_schedule(s, d);

  std::vector<double> boundaries{0.0};
  for (const PulseInstruction& in : s.instructions) {
    boundaries.push_back(static_cast<double>(in.start_dt));
    boundaries.push_back(static_cast<double>(in.start_dt + in.duration_dt));
  }
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());

  StateVector state = initial;
  for (std::size_t b = 0; b + 1 < boundaries.size(); ++b) {
    const double t0 = boundaries[b];
    const double t1 = boundaries[b + 1];
    std::vector<const PulseInstruction*> active;
    for (const PulseInstruction& in : s.instructions) {
      const double start = static_cast<double>(in.start_dt);
      const double end = static_cast<double>(in.start_dt + in.duration_dt);
      if (start <= t0 && t1 <= end) active.push_back(&in);
    }
    if (active.empty()) continue;  // idle gaps are the identity in the rotating frame

    QubitComponents comps(s.n);
    for (const PulseInstruction* in : active) {
      if (in->q1) comps.unite(in->q0, *in->q1);
    }
    std::vector<std::vector<std::size_t>> comp_qubits(s.n);
    std::vector<std::vector<const PulseInstruction*>> comp_instrs(s.n);
    for (const PulseInstruction* in : active) comp_instrs[comps.find(in->q0)].push_back(in);
    for (std::size_t q = 0; q < s.n; ++q) {
      if (!comp_instrs[comps.find(q)].empty()) comp_qubits[comps.find(q)].push_back(q);
    }

    const bool constant = std::all_of(active.begin(), active.end(), [](const PulseInstruction* in) {
      return in->envelope == PulseInstruction::Envelope::square;
    });
    const std::size_t steps =
        constant ? 1 : static_cast<std::size_t>(std::ceil((t1 - t0) / step_dt - 1e-12));
    const double h = (t1 - t0) / static_cast<double>(steps);

    for (std::size_t root = 0; root < s.n; ++root) {
      const auto& qubits = comp_qubits[root];
      if (qubits.empty()) continue;
      const auto& instrs = comp_instrs[root];
      const std::size_t m = qubits.size();
      const std::size_t ldim = std::size_t{1} << m;
      std::vector<std::size_t> local(s.n, 0);
      for (std::size_t i = 0; i < m; ++i) local[qubits[i]] = i;

      Eigen::MatrixXcd ham(ldim, ldim);
      const auto add_term = [&](cd coeff, std::initializer_list<std::pair<std::size_t, char>> ops) {
        for (std::size_t col = 0; col < ldim; ++col) {
          cd v = coeff;
          std::size_t row = col;
          for (const auto& [j, pauli] : ops) {
            const std::size_t lmask = std::size_t{1} << (m - 1 - j);
            const bool bit = (col & lmask) != 0;
            switch (pauli) {
              case 'X':
                row ^= lmask;
                break;
              case 'Y':
                row ^= lmask;
                v *= bit ? cd(0, -1) : cd(0, 1);
                break;
              default:  // 'Z'
                if (bit) v = -v;
                break;
            }
          }
          ham(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
        }
      };

      for (std::size_t k = 0; k < steps; ++k) {
        const double lo = t0 + static_cast<double>(k) * h;
        ham.setZero();
        for (const PulseInstruction* in : instrs) {
          const double start = static_cast<double>(in->start_dt);
          const double env = envelope_average(*in, lo - start, lo + h - start);
          if (in->q1) {
            const double rate = d.cr_rate_per_amplitude * in->amplitude * env;
            add_term(rate * std::cos(in->angle), {{local[in->q0], 'Z'}, {local[*in->q1], 'X'}});
            add_term(rate * std::sin(in->angle), {{local[in->q0], 'Z'}, {local[*in->q1], 'Y'}});
          } else {
            const double rate = d.rabi_rate_per_amplitude * in->amplitude * env / 2.0;
            add_term(rate * std::cos(in->angle), {{local[in->q0], 'X'}});
            add_term(rate * std::sin(in->angle), {{local[in->q0], 'Y'}});
            if (in->detuning != 0.0) add_term(in->detuning / 2.0, {{local[in->q0], 'Z'}});
          }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ham);
        if (es.info() != Eigen::Success) throw std::runtime_error("pulse step diagonalization failed");
        const Eigen::VectorXcd phases =
            (cd(0, -h) * es.eigenvalues().cast<cd>().array()).exp().matrix();
        const Eigen::MatrixXcd u =
            es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
        apply_local_unitary(state, qubits, u);
      }
    }
  }
  return state;
}

StateVector run_pulse_lab_frame(const PulseSchedule& s, const DeviceModel& d,
                                const StateVector& initial, double omega_q, double omega_d,
                                double step_dt) {
  if (s.n != 1 || initial.n != 1) {
    throw std::invalid_argument("lab-frame integrator handles a single qubit");
  }
  if (!(step_dt > 0.0)) throw std::invalid_argument("step_dt must be positive");
  validate_schedule(s, d);
  for (const PulseInstruction& in : s.instructions) {
    if (in.q1) throw std::invalid_argument("lab-frame integrator takes single-qubit drives only");
  }

  double end = 0.0;
  for (const PulseInstruction& in : s.instructions) {
    end = std::max(end, static_cast<double>(in.start_dt + in.duration_dt));
  }
  const auto steps = static_cast<std::size_t>(std::ceil(end / step_dt - 1e-12));

  StateVector state = initial;
  for (std::size_t k = 0; k < steps; ++k) {
    const double h = (k + 1 == steps) ? end - step_dt * static_cast<double>(k) : step_dt;
    const double tm = step_dt * static_cast<double>(k) + h / 2.0;
    // H(tm) = a X + b Y with the carrier and qubit phases evaluated literally.
    double a = 0.0;
    double b = 0.0;
    for (const PulseInstruction& in : s.instructions) {
      const double tau = tm - static_cast<double>(in.start_dt);
      if (tau < 0.0 || tau >= static_cast<double>(in.duration_dt)) continue;
      const double omega = d.rabi_rate_per_amplitude * in.amplitude * envelope_value(in, tau);
      const double carrier = omega * std::sin(omega_d * tm - in.angle);
      a += -carrier * std::sin(omega_q * tm);
      b += carrier * std::cos(omega_q * tm);
    }
    const double r = std::hypot(a, b);
    if (r * h < 1e-300) continue;
    const cd c = std::cos(r * h);
    const cd is = cd(0, -std::sin(r * h) / r);
    const cd v0 = state.amplitudes[0];
    const cd v1 = state.amplitudes[1];
    // exp(-i h (aX + bY)) = cos(rh) I - i sin(rh)/r (aX + bY)
    state.amplitudes[0] = c * v0 + is * (a * v1 - cd(0, b) * v1);
    state.amplitudes[1] = c * v1 + is * (a * v0 + cd(0, b) * v0);
  }
  return state;
}

PulseSchedule build_pulse_ansatz(std::size_t n, std::size_t layers,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 const std::vector<double>& params) {
  if (n == 0) throw std::invalid_argument("ansatz needs at least one qubit");
  for (const auto& pr : pairs) {
    if (pr.first >= n || pr.second >= n || pr.first == pr.second) {
      throw std::invalid_argument("bad coupling pair in pulse ansatz");
    }
  }
  const std::size_t expected = layers * (3 * n + 3 * pairs.size());
  if (params.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " pulse ansatz parameters, got " + std::to_string(params.size()));
  }

  // Raw parameters are unconstrained; the maps below fold them into the
  // hardware ranges smoothly: amplitude in [0, 1], angle in [-pi, pi],
  // duration a multiple of 16 dt capped at the channel's base length.
  const auto fold_amplitude = [](double raw) { return 0.5 * (1.0 - std::cos(raw)); };
  const auto fold_angle = [](double raw) {
    const double a = std::remainder(raw, 2.0 * std::numbers::pi);
    return std::clamp(a, -std::numbers::pi, std::numbers::pi);
  };
  const auto fold_duration = [](double raw, std::size_t base) {
    const double scale = std::clamp(std::exp(raw), 0.25, 1.0);
    const double quantum = static_cast<double>(kPulseQuantum);
    const auto ticks = static_cast<std::size_t>(
        std::lround(std::max(quantum, std::round(static_cast<double>(base) * scale / quantum) * quantum) /
                    quantum));
    return ticks * kPulseQuantum;
  };

  PulseSchedule s;
  s.n = n;
  std::size_t p = 0;
  std::size_t layer_start = 0;
  for (std::size_t layer = 0; layer < layers; ++layer) {
    std::size_t singles_end = layer_start;
    for (std::size_t q = 0; q < n; ++q) {
      PulseInstruction in;
      in.q0 = q;
      in.amplitude = fold_amplitude(params[p]);
      in.angle = fold_angle(params[p + 1]);
      in.duration_dt = fold_duration(params[p + 2], 32);
      in.start_dt = layer_start;
      p += 3;
      singles_end = std::max(singles_end, in.start_dt + in.duration_dt);
      s.instructions.push_back(in);
    }
    std::size_t cursor = singles_end;
    for (const auto& pr : pairs) {
      PulseInstruction in;
      in.q0 = pr.first;
      in.q1 = pr.second;
      in.amplitude = fold_amplitude(params[p]);
      in.angle = fold_angle(params[p + 1]);
      in.duration_dt = fold_duration(params[p + 2], 64);
      in.start_dt = cursor;
      p += 3;
      cursor += in.duration_dt;
      s.instructions.push_back(in);
    }
    layer_start = cursor;
  }
  s.total_duration_dt = layer_start;
  return s;
}

std::size_t duration_of(const PulseSchedule& s) {
  std::size_t end = 0;
  for (const PulseInstruction& in : s.instructions) {
    end = std::max(end, in.start_dt + in.duration_dt);
  }
  return end;
}

double estimate_energy(const PauliSum& h, const StateVector& state,
                       std::optional<std::size_t> shots,
                       const std::vector<MeasurementGroup>* groups, std::uint64_t seed) {
  if (h.n() != state.n) throw std::invalid_argument("operator and state widths differ");
  if (!shots) return expectation(h, state);
  if (*shots == 0) throw std::invalid_argument("shot count must be positive");
  if (!groups) throw std::invalid_argument("shot-based estimation needs measurement groups");

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  double energy = 0.0;
  for (const MeasurementGroup& g : *groups) {
    const GateCircuit circ = basis_circuit(g);
    const StateVector rotated = circ.ops.empty() ? state : run_gate(circ, state);

    std::vector<double> cumulative(rotated.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
      acc += std::norm(rotated.amplitudes[i]);
      cumulative[i] = acc;
    }

    std::vector<std::size_t> histogram(rotated.dim(), 0);
    for (std::size_t shot = 0; shot < *shots; ++shot) {
      const double u = uniform() * acc;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      if (it == cumulative.end()) --it;
      ++histogram[static_cast<std::size_t>(it - cumulative.begin())];
    }

    for (const auto& [member, coeff] : g.members) {
      std::size_t mask = 0;
      for (std::size_t q = 0; q < member.n(); ++q) {
        if (member.x_bit(q) || member.z_bit(q)) mask |= state.bit_mask(q);
      }
      if (mask == 0) {  // identity measures exactly
        energy += coeff;
        continue;
      }
      double parity_sum = 0.0;
      for (std::size_t outcome = 0; outcome < histogram.size(); ++outcome) {
        if (histogram[outcome] == 0) continue;
        const double sign = (std::popcount(outcome & mask) % 2 == 0) ? 1.0 : -1.0;
        parity_sum += sign * static_cast<double>(histogram[outcome]);
      }
      energy += coeff * parity_sum / static_cast<double>(*shots);
    }
  }
  return energy;
}

}  // namespace csvqe
