#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "csvqe/contextual.hpp"
#include "csvqe/grouping.hpp"
#include "csvqe/io.hpp"
#include "csvqe/optimize.hpp"
#include "csvqe/simulator.hpp"
#include "csvqe/subspace.hpp"
#include "csvqe/tapering.hpp"

namespace csvqe {

enum class AnsatzKind { gate, pulse, oracle };

std::string to_string(AnsatzKind kind);
AnsatzKind ansatz_from_name(const std::string& name);

/// How to solve the reduced contextual problem. The optimizer seed doubles
/// as the global solve seed: it drives the pulse parameter initialization
/// and the shot sampler, so equal options mean bitwise-equal runs.
struct SolveOptions {
  AnsatzKind ansatz = AnsatzKind::gate;
  std::size_t layers = 2;
  OptimizerConfig optimizer;
  std::optional<std::size_t> shots;  // empty = exact expectations
  GroupingMode grouping_mode = GroupingMode::qubitwise;
  std::optional<DeviceModel> device;  // pulse ansatz; defaults to a linear chain
  TimingTable timing;
};

struct ContextualSolveResult {
  VqeResult vqe;
  double e_c = 0.0;  // vqe.best_energy + constant shift
  std::size_t duration_dt = 0;
};

/// VQE (or the exact-diagonalization oracle) on the reduced problem. An
/// empty reduced operator short-circuits: E_c is the constant shift and no
/// quantum evaluation happens.
ContextualSolveResult solve_contextual(const ReducedProblem& reduced, const SolveOptions& options);

struct PipelineOptions {
  bool do_taper = true;
  SectorStrategy sector_strategy = SectorStrategy::exhaustive;
  std::optional<SectorAssignment> explicit_sector;
  /// Reduced qubit count to solve on (counted after tapering); empty keeps
  /// every qubit, i.e. no stabilizers are enforced.
  std::optional<std::size_t> n_target;
  SolveOptions solve;
};

struct PipelineResult {
  double e_nc = 0.0;
  double e_c = 0.0;
  double e_csvqe = 0.0;
  PipelineReport report;
};

/// Full chain: taper -> split -> noncontextual solve -> stabilizer choice ->
/// projection of the remainder H - E_nc (so E_csvqe = E_nc + E_c is exact at
/// full rank and variational everywhere) -> grouping -> solve.
PipelineResult run_pipeline(const ProblemInstance& instance, const PipelineOptions& options);

/// Smallest feasible n_target: the qubit count minus the number of
/// available stabilizer candidates (generators, plus the composite when
/// anticommuting classes exist).
std::size_t min_feasible_n_target(std::size_t n, const NoncontextualStructure& structure);

/// estimated / reference. Throws when the
/// reference is (numerically) zero.
double accuracy_of(double estimated, double reference);

}  // namespace csvqe
