#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "fracgrad/bounds.hpp"
#include "fracgrad/scalar_oracle.hpp"

namespace fracgrad {

/// Exact quadratic model of an objective: gradient(x) = hessian * x + linear.
/// Present on quadratic problems so runs can use the exact line-search step.
struct QuadraticModel {
  Eigen::MatrixXd hessian;
  Eigen::VectorXd linear;
};

/// k-dimensional objective with gradient access and per-coordinate scalar
/// restrictions f_{j,x}(y) = f(x + (y - x_j) e_j).
///
/// coordinate_oracle(j, x) must return an oracle whose deriv1 at y = x_j
/// equals gradient(x)_j; the descent operators apply one-dimensional
/// fractional derivatives to these restrictions coordinate by coordinate.
struct ProblemOracle {
  int dim = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<ScalarOracle(int, const Eigen::VectorXd&)> coordinate_oracle;
  SmoothnessProfile profile;

  std::optional<Eigen::VectorXd> optimum;  // x*, when known
  std::optional<double> optimum_value;     // f* (a valid lower bound suffices
                                           // for non-convex problems)
  std::optional<QuadraticModel> quadratic;
  bool separable = false;
};

}  // namespace fracgrad
