#include <cmath>
#include <limits>
#include <stdexcept>

#include "csvqe/optimize.hpp"
#include "doctest.h"

using csvqe::OptimizerConfig;
using csvqe::OptimizerMethod;
using csvqe::VqeResult;

namespace {

double quadratic(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - (1.0 + static_cast<double>(i));
    s += (1.0 + 0.5 * static_cast<double>(i)) * d * d;
  }
  return s - 3.0;
}

double rosenbrock(const std::vector<double>& x) {
  const double a = 1.0 - x[0];
  const double b = x[1] - x[0] * x[0];
  return a * a + 100.0 * b * b;
}

}  // namespace

TEST_CASE("method names round trip") {
  CHECK(csvqe::to_string(OptimizerMethod::nelder_mead) == "nelder_mead");
  CHECK(csvqe::to_string(OptimizerMethod::cobyla_like) == "cobyla_like");
  CHECK(csvqe::optimizer_from_name("nelder_mead") == OptimizerMethod::nelder_mead);
  CHECK(csvqe::optimizer_from_name("cobyla_like") == OptimizerMethod::cobyla_like);
  CHECK_THROWS_AS(csvqe::optimizer_from_name("bfgs"), std::invalid_argument);
}

TEST_CASE("nelder_mead minimizes a separable quadratic") {
  OptimizerConfig config;
  config.max_iterations = 400;
  config.tolerance = 1e-12;
  const VqeResult r = csvqe::minimize(quadratic, {0.0, 0.0, 0.0}, config);
  CHECK(r.best_energy == doctest::Approx(-3.0).epsilon(1e-8));
  CHECK(r.best_params[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.best_params[1] == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(r.best_params[2] == doctest::Approx(3.0).epsilon(1e-3));
  CHECK(r.evaluations > 0);
  CHECK(r.evaluations < 2000);
}

TEST_CASE("nelder_mead handles the rosenbrock valley") {
  OptimizerConfig config;
  config.max_iterations = 2000;
  config.tolerance = 1e-14;
  const VqeResult r = csvqe::minimize(rosenbrock, {-1.2, 1.0}, config);
  CHECK(r.best_energy < 1e-8);
  CHECK(r.best_params[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.best_params[1] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("cobyla_like minimizes a quadratic") {
  OptimizerConfig config;
  config.method = OptimizerMethod::cobyla_like;
  config.max_iterations = 500;
  config.tolerance = 1e-10;
  const VqeResult r = csvqe::minimize(quadratic, {0.0, 0.0, 0.0}, config);
  CHECK(r.best_energy == doctest::Approx(-3.0).epsilon(1e-5));
}

TEST_CASE("traces record the running best per iteration") {
  OptimizerConfig config;
  config.max_iterations = 150;
  const VqeResult r = csvqe::minimize(quadratic, {4.0, -2.0, 0.5}, config);
  REQUIRE_FALSE(r.trace.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].energy <= r.trace[i - 1].energy);
    CHECK(r.trace[i].iteration >= r.trace[i - 1].iteration);
  }
  CHECK(r.trace.back().energy == r.best_energy);
}

TEST_CASE("minimize is deterministic") {
  for (const auto method : {OptimizerMethod::nelder_mead, OptimizerMethod::cobyla_like}) {
    OptimizerConfig config;
    config.method = method;
    config.max_iterations = 200;
    const VqeResult a = csvqe::minimize(quadratic, {0.3, -0.7, 2.0}, config);
    const VqeResult b = csvqe::minimize(quadratic, {0.3, -0.7, 2.0}, config);
    CHECK(a.best_energy == b.best_energy);
    CHECK(a.best_params == b.best_params);
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("zero-dimensional problems return immediately") {
  const VqeResult r = csvqe::minimize([](const std::vector<double>&) { return 7.5; }, {}, {});
  CHECK(r.best_energy == 7.5);
  CHECK(r.best_params.empty());
}

TEST_CASE("minimize rejects broken inputs") {
  CHECK_THROWS_AS(
      csvqe::minimize([](const std::vector<double>&) { return std::nan(""); }, {0.0}, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(csvqe::minimize(
                      [](const std::vector<double>&) {
                        return std::numeric_limits<double>::infinity();
                      },
                      {0.0}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(csvqe::minimize(csvqe::Objective{}, {0.0}, {}), std::invalid_argument);
}

TEST_CASE("tolerance stops the search early") {
  OptimizerConfig tight;
  tight.max_iterations = 10000;
  tight.tolerance = 1e-3;
  const VqeResult r = csvqe::minimize(quadratic, {0.0, 0.0, 0.0}, tight);
  OptimizerConfig loose = tight;
  loose.tolerance = 1e-12;
  const VqeResult r2 = csvqe::minimize(quadratic, {0.0, 0.0, 0.0}, loose);
  CHECK(r.evaluations < r2.evaluations);
  CHECK(r2.best_energy <= r.best_energy);
}
