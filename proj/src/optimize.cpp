#include "csvqe/optimize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csvqe {

namespace {

constexpr double kInitialStep = 0.25;

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

void sort_simplex(std::vector<Vertex>& simplex) {
  std::stable_sort(simplex.begin(), simplex.end(),
                   [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
}

VqeResult nelder_mead(const Objective& f, const std::vector<double>& x0,
                      const OptimizerConfig& config) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  VqeResult result;
  const auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  const double f0 = eval(x0);
  if (!std::isfinite(f0)) {
    throw std::invalid_argument("objective is not finite at the starting point");
  }
  const std::size_t d = x0.size();
  if (d == 0) {
    result.best_params = x0;
    result.best_energy = f0;
    result.trace.push_back({0, f0});
    return result;
  }

  std::vector<Vertex> simplex{{x0, f0}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> x = x0;
    x[i] += kInitialStep;
    const double fx = eval(x);
    simplex.push_back({std::move(x), fx});
  }

  std::size_t iteration = 0;
  for (; iteration < config.max_iterations; ++iteration) {
    sort_simplex(simplex);
    result.trace.push_back({iteration, simplex.front().f});
    if (simplex.back().f - simplex.front().f < config.tolerance) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(d);
    const Vertex& worst = simplex.back();

    const auto blend = [&](double t) {
      std::vector<double> x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
      return x;
    };

    std::vector<double> xr = blend(kReflect);
    const double fr = eval(xr);
    if (fr < simplex.front().f) {
      std::vector<double> xe = blend(kExpand);
      const double fe = eval(xe);
      simplex.back() = fe < fr ? Vertex{std::move(xe), fe} : Vertex{std::move(xr), fr};
      continue;
    }
    if (fr < simplex[d - 1].f) {
      simplex.back() = {std::move(xr), fr};
      continue;
    }
    if (fr < worst.f) {  // outside contraction
      std::vector<double> xc(d);
      for (std::size_t i = 0; i < d; ++i) xc[i] = centroid[i] + kContract * (xr[i] - centroid[i]);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex.back() = {std::move(xc), fc};
        continue;
      }
    } else {  // inside contraction
      std::vector<double> xc = blend(-kContract);
      const double fc = eval(xc);
      if (fc < worst.f) {
        simplex.back() = {std::move(xc), fc};
        continue;
      }
    }
    for (std::size_t v = 1; v <= d; ++v) {  // shrink toward the best vertex
      for (std::size_t i = 0; i < d; ++i) {
        simplex[v].x[i] = simplex[0].x[i] + kShrink * (simplex[v].x[i] - simplex[0].x[i]);
      }
      simplex[v].f = eval(simplex[v].x);
    }
  }

  sort_simplex(simplex);
  result.trace.push_back({iteration, simplex.front().f});
  result.best_params = simplex.front().x;
  result.best_energy = simplex.front().f;
  return result;
}

VqeResult cobyla_like(const Objective& f, const std::vector<double>& x0,
                      const OptimizerConfig& config) {
  VqeResult result;
  const auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  const double f0 = eval(x0);
  if (!std::isfinite(f0)) {
    throw std::invalid_argument("objective is not finite at the starting point");
  }
  const std::size_t d = x0.size();
  if (d == 0) {
    result.best_params = x0;
    result.best_energy = f0;
    result.trace.push_back({0, f0});
    return result;
  }

  std::vector<Vertex> simplex{{x0, f0}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> x = x0;
    x[i] += kInitialStep;
    const double fx = eval(x);
    simplex.push_back({std::move(x), fx});
  }

  double radius = kInitialStep;
  std::size_t iteration = 0;
  for (; iteration < config.max_iterations; ++iteration) {
    sort_simplex(simplex);
    result.trace.push_back({iteration, simplex.front().f});
    if (radius < config.tolerance) break;

    // Linear interpolation model through the simplex, anchored at the best
    // vertex; rank deficiency (a collapsed simplex) falls back to the
    // least-squares gradient.
    Eigen::MatrixXd a(d, d);
    Eigen::VectorXd b(d);
    for (std::size_t v = 1; v <= d; ++v) {
      for (std::size_t i = 0; i < d; ++i) {
        a(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(i)) =
            simplex[v].x[i] - simplex[0].x[i];
      }
      b(static_cast<Eigen::Index>(v - 1)) = simplex[v].f - simplex[0].f;
    }
    const Eigen::VectorXd gradient = a.colPivHouseholderQr().solve(b);
    const double gnorm = gradient.norm();
    if (!(gnorm > 1e-14)) break;

    std::vector<double> x_new(d);
    for (std::size_t i = 0; i < d; ++i) {
      x_new[i] = simplex[0].x[i] - radius * gradient(static_cast<Eigen::Index>(i)) / gnorm;
    }
    const double f_new = eval(x_new);
    radius *= f_new < simplex.front().f ? 1.6 : 0.7;
    if (f_new < simplex.back().f) {
      simplex.back() = {std::move(x_new), f_new};
    } else {  // refresh the geometry instead of keeping a useless point
      Vertex& worst = simplex.back();
      for (std::size_t i = 0; i < d; ++i) {
        worst.x[i] = simplex[0].x[i] + 0.5 * (worst.x[i] - simplex[0].x[i]);
      }
      worst.f = eval(worst.x);
    }
  }

  sort_simplex(simplex);
  result.trace.push_back({iteration, simplex.front().f});
  result.best_params = simplex.front().x;
  result.best_energy = simplex.front().f;
  return result;
}

}  // namespace

std::string to_string(OptimizerMethod method) {
  return method == OptimizerMethod::nelder_mead ? "nelder_mead" : "cobyla_like";
}

OptimizerMethod optimizer_from_name(const std::string& name) {
  if (name == "nelder_mead") return OptimizerMethod::nelder_mead;
  if (name == "cobyla_like") return OptimizerMethod::cobyla_like;
  throw std::invalid_argument("unknown optimizer '" + name + "'");
}

VqeResult minimize(const Objective& f, const std::vector<double>& x0,
                   const OptimizerConfig& config) {
  if (!f) throw std::invalid_argument("minimize needs an objective");
  return config.method == OptimizerMethod::nelder_mead ? nelder_mead(f, x0, config)
                                                       : cobyla_like(f, x0, config);
}

}  // namespace csvqe
