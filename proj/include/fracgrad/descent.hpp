#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "fracgrad/problem.hpp"
#include "fracgrad/schedules.hpp"

namespace fracgrad {

enum class Method {
  gd,
  frac_sc_separable,
  frac_sc_general,
  frac_cvx_separable,
  frac_cvx_general,
  frac_nonconvex,
  at_cfgd,
};

const char* method_name(Method m);
Method method_from_name(const std::string& name);

/// How the per-step eta is chosen.  `theoretical` uses the method's
/// convergence-guaranteed schedule (and records its contraction factor);
/// `optimal_quadratic` is the exact line-search step, available on problems
/// carrying a quadratic model.
enum class EtaMode { theoretical, constant, optimal_quadratic };

struct LambdaSchedule {
  enum class Kind { constant, power_decay, s_driven };
  Kind kind = Kind::constant;
  double lambda0 = 0.0;
  double decay = 0.0;  // q in lambda0 / (t+1)^q

  double at(int t) const;
};

struct DescentConfig {
  Method method = Method::gd;
  double alpha = 0.5;
  double beta = 0.0;
  double phi = 1.0;       // strongly convex schedules
  double epsilon = 1e-3;  // feasibility slack
  LambdaSchedule lambda;
  double s0 = 5.0;                       // s-driven convex schedule
  bool prefer_negative_lambda = true;    // branch of the s coupling
  int memory = 1;                        // terminal lag m
  std::vector<Eigen::VectorXd> history;  // x_{-m}, ..., x_{-1}
  EtaMode eta_mode = EtaMode::theoretical;
  std::optional<double> eta;  // constant-step value
  int horizon = 100;
  QuadratureConfig quad;
};

/// One row of a run.  eta/lambda/rho describe the step taken FROM this
/// iterate and stay NaN on the final record (and rho whenever no
/// theoretical factor applies).  f_avg is f at the running iterate average
/// (convex schedules, from t = 1); min_grad_pow is the running minimum of
/// ||grad||_{1+1/p}^{1+1/p} (non-convex schedule).
struct IterateRecord {
  int t = 0;
  Eigen::VectorXd x;
  double f = 0.0;
  double grad_norm = 0.0;
  double dist_sq = std::numeric_limits<double>::quiet_NaN();
  double eta = std::numeric_limits<double>::quiet_NaN();
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double rho = std::numeric_limits<double>::quiet_NaN();
  double f_avg = std::numeric_limits<double>::quiet_NaN();
  double min_grad_pow = std::numeric_limits<double>::quiet_NaN();
};

struct IterateTrace {
  Method method = Method::gd;
  std::vector<IterateRecord> steps;        // horizon + 1 records
  std::optional<Eigen::VectorXd> average;  // final iterate average x̄_T
};

/// Runs `config.horizon` steps of the selected method from x0.  Feasibility
/// is validated at construction and re-checked every step; violations raise
/// infeasible_error naming the condition, and an objective increase past
/// 1e6·(1+|f(x0)|) raises divergence_error.
IterateTrace run_descent(const ProblemOracle& problem, const DescentConfig& config,
                         const Eigen::VectorXd& x0);

}  // namespace fracgrad
