#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "csvqe/circuit.hpp"
#include "csvqe/grouping.hpp"
#include "csvqe/pauli.hpp"
#include "csvqe/state.hpp"

namespace csvqe {

StateVector run_gate(const GateCircuit& c, const StateVector& initial);

/// EfficientSU2: RY+RZ rotation layers separated by linear CNOT ladders,
/// closing with a final rotation layer. Parameter count 2*n*(layers+1).
GateCircuit build_su2_ansatz(std::size_t n, std::size_t layers, const std::vector<double>& params,
                             const TimingTable& table = {});

/// One drive instruction, in the rotating frame of its channel. Single-qubit
/// (q1 unset): (rabi*amplitude*env/2)(cos(angle) X + sin(angle) Y)
/// + (detuning/2) Z. Cross-resonance (q1 set): cr*amplitude*env *
/// (cos(angle) Z(x)X + sin(angle) Z(x)Y) on (q0, q1).
struct PulseInstruction {
  enum class Envelope { square, gaussian_square };

  std::size_t q0 = 0;
  std::optional<std::size_t> q1;
  double amplitude = 0.0;  // in [0, 1]
  double angle = 0.0;      // phase phi in [-pi, pi]
  std::size_t duration_dt = 16;
  double detuning = 0.0;   // rad/dt, single-qubit channels only
  Envelope envelope = Envelope::square;
  std::size_t start_dt = 0;
};

struct PulseSchedule {
  std::size_t n = 0;
  std::vector<PulseInstruction> instructions;
  std::size_t total_duration_dt = 0;
};

struct DeviceModel {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> coupling_pairs;
  double rabi_rate_per_amplitude = kDefaultRabiRate;
  double cr_rate_per_amplitude = kDefaultCrRate;
  double dt_seconds = 0.22e-9;

  static constexpr double kDefaultRabiRate = 0.0981747704246810387;  // pi/32 rad/dt
  static constexpr double kDefaultCrRate = 0.0245436926061702597;    // pi/128 rad/dt
};

/// Linear-chain device: couplings (0,1), (1,2), ..., default rates.
DeviceModel default_device_model(std::size_t n);
DeviceModel load_device_model(const std::filesystem::path& path);

inline constexpr std::size_t kPulseQuantum = 16;  // dt granularity of durations

/// Rotating-frame, RWA evolution: piecewise-constant steps of step_dt
/// (envelopes sampled at step midpoints, instruction edges always respected),
/// each step an exact matrix exponential on the active qubit components.
StateVector run_pulse(const PulseSchedule& s, const DeviceModel& d, const StateVector& initial,
                      double step_dt = 1.0);

/// Validation-only integrator for the literal lab-frame drive
///   rate*amp*env(t) * (cos(phi) sin(wd t) - sin(phi) cos(wd t))
///                   * (cos(wq t) Y - sin(wq t) X),
/// restricted to one qubit. Under RWA at resonance this equals the default
/// model with the drive sign flipped (phi -> phi + pi).
StateVector run_pulse_lab_frame(const PulseSchedule& s, const DeviceModel& d,
                                const StateVector& initial, double omega_q, double omega_d,
                                double step_dt);

/// Per layer: one single-qubit instruction per qubit (parallel), then one
/// cross-resonance instruction per coupling pair (sequential). Parameters
/// per channel per layer: raw amplitude, angle, duration-scale; vector
/// length layers * (3n + 3*|pairs|).
PulseSchedule build_pulse_ansatz(std::size_t n, std::size_t layers,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 const std::vector<double>& params);

std::size_t duration_of(const PulseSchedule& s);

/// Exact expectation when shots is empty; otherwise samples each group's
/// basis-rotated computational-basis distribution and combines member
/// parities with their coefficients. The seed fully determines the estimate.
double estimate_energy(const PauliSum& h, const StateVector& state,
                       std::optional<std::size_t> shots = {},
                       const std::vector<MeasurementGroup>* groups = nullptr,
                       std::uint64_t seed = 0);

}  // namespace csvqe
