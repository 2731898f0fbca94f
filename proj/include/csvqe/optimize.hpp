#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "csvqe/io.hpp"

namespace csvqe {

enum class OptimizerMethod { nelder_mead, cobyla_like };

std::string to_string(OptimizerMethod method);
OptimizerMethod optimizer_from_name(const std::string& name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::nelder_mead;
  std::size_t max_iterations = 100;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
};

struct VqeResult {
  std::vector<double> best_params;
  double best_energy = 0.0;
  std::vector<TraceEntry> trace;  // best value seen as of each iteration
  std::size_t evaluations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Derivative-free minimization from x0. nelder_mead is the reference
/// simplex method (deterministic: fixed initial simplex x0 + 0.25 e_i,
/// standard reflect/expand/contract/shrink coefficients). cobyla_like fits
/// a linear model through the simplex and takes trust-region steps, in the
/// spirit of COBYLA. Throws std::invalid_argument if the objective is not
/// finite at x0.
VqeResult minimize(const Objective& f, const std::vector<double>& x0,
                   const OptimizerConfig& config);

}  // namespace csvqe
