#include "fracgrad/descent.hpp"

#include <cmath>
#include <sstream>

#include "fracgrad/errors.hpp"
#include "fracgrad/operators.hpp"

namespace fracgrad {

const char* method_name(Method m) {
  switch (m) {
    case Method::gd: return "gd";
    case Method::frac_sc_separable: return "frac-sc-separable";
    case Method::frac_sc_general: return "frac-sc-general";
    case Method::frac_cvx_separable: return "frac-cvx-separable";
    case Method::frac_cvx_general: return "frac-cvx-general";
    case Method::frac_nonconvex: return "frac-nonconvex";
    case Method::at_cfgd: return "at-cfgd";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::gd, Method::frac_sc_separable, Method::frac_sc_general,
                   Method::frac_cvx_separable, Method::frac_cvx_general,
                   Method::frac_nonconvex, Method::at_cfgd}) {
    if (name == method_name(m)) return m;
  }
  throw parameter_error("unknown method: " + name);
}

double LambdaSchedule::at(int t) const {
  switch (kind) {
    case Kind::constant: return lambda0;
    case Kind::power_decay: return lambda0 / std::pow(t + 1.0, decay);
    case Kind::s_driven:
      throw parameter_error("LambdaSchedule: s-driven lambdas come from the s sequence");
  }
  return lambda0;
}

namespace {

bool uses_sandwich_constants(Method m) {
  return m == Method::frac_sc_separable || m == Method::frac_sc_general ||
         m == Method::frac_cvx_separable || m == Method::frac_cvx_general;
}

bool is_convex_schedule(Method m) {
  return m == Method::frac_cvx_separable || m == Method::frac_cvx_general;
}

void validate(const ProblemOracle& problem, const DescentConfig& cfg) {
  if (problem.dim <= 0) throw parameter_error("run_descent: problem has no dimensions");
  if (cfg.horizon < 0) throw parameter_error("run_descent: horizon must be >= 0");
  if (!(cfg.epsilon > 0.0)) throw parameter_error("run_descent: epsilon must be positive");
  problem.profile.validate();

  switch (cfg.method) {
    case Method::gd:
      break;
    case Method::frac_sc_separable:
    case Method::frac_sc_general:
      if (!(cfg.phi > 0.0 && cfg.phi < 2.0))
        throw parameter_error("run_descent: phi must lie in (0, 2)");
      if (!(problem.profile.mu > 0.0))
        throw parameter_error("run_descent: strongly convex schedules require mu > 0");
      if (cfg.lambda.kind == LambdaSchedule::Kind::s_driven)
        throw parameter_error("run_descent: s-driven lambdas belong to frac-cvx-general");
      break;
    case Method::frac_cvx_separable:
      if (cfg.lambda.kind != LambdaSchedule::Kind::constant)
        throw parameter_error("run_descent: frac-cvx-separable uses a constant lambda");
      break;
    case Method::frac_cvx_general:
      if (cfg.lambda.kind == LambdaSchedule::Kind::s_driven && !(cfg.s0 > s_floor()))
        throw parameter_error("run_descent: the s sequence requires s0 > sqrt(5) + 2");
      if (cfg.lambda.kind == LambdaSchedule::Kind::power_decay)
        throw parameter_error("run_descent: frac-cvx-general lambda is constant or s-driven");
      break;
    case Method::frac_nonconvex:
      if (cfg.lambda.kind != LambdaSchedule::Kind::constant)
        throw parameter_error("run_descent: frac-nonconvex uses a constant lambda");
      break;
    case Method::at_cfgd:
      if (cfg.memory < 1) throw parameter_error("run_descent: at-cfgd requires memory >= 1");
      if (static_cast<int>(cfg.history.size()) != cfg.memory)
        throw parameter_error("run_descent: at-cfgd needs one history iterate per lag step");
      for (const auto& h : cfg.history)
        if (h.size() != problem.dim)
          throw parameter_error("run_descent: at-cfgd history dimension mismatch");
      if (cfg.eta_mode == EtaMode::theoretical)
        throw parameter_error(
            "run_descent: at-cfgd has no theoretical step; use a constant or the "
            "quadratic line-search step");
      break;
  }
  if (cfg.method != Method::gd && !(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
    throw parameter_error("run_descent: alpha must lie in (0, 1]");
  if (cfg.eta_mode == EtaMode::constant && !cfg.eta)
    throw parameter_error("run_descent: constant eta mode needs an eta value");
  if (cfg.eta_mode == EtaMode::optimal_quadratic && !problem.quadratic)
    throw parameter_error(
        "run_descent: the line-search step needs a problem with a quadratic model");
}

double line_search_eta(const QuadraticModel& model, const Eigen::VectorXd& g,
                       const Eigen::VectorXd& d) {
  const double dd = d.dot(model.hessian * d);
  if (dd == 0.0) return 0.0;  // converged: direction vanished
  return g.dot(d) / dd;
}

}  // namespace

IterateTrace run_descent(const ProblemOracle& problem, const DescentConfig& cfg,
                         const Eigen::VectorXd& x0) {
  validate(problem, cfg);
  if (x0.size() != problem.dim)
    throw parameter_error("run_descent: x0 dimension mismatch");

  const int T = cfg.horizon;
  IterateTrace trace;
  trace.method = cfg.method;
  trace.steps.reserve(T + 1);

  // Convex schedules instantiate the sandwich constants with mu = 0; the
  // strongly convex ones keep the problem's mu.
  SmoothnessProfile prof = problem.profile;
  if (is_convex_schedule(cfg.method)) prof.mu = 0.0;
  BoundConstants k;
  if (uses_sandwich_constants(cfg.method)) k = k_constants(prof, cfg.alpha, cfg.beta);

  NonconvexSchedule ncx{};
  if (cfg.method == Method::frac_nonconvex) {
    std::optional<double> eta_fixed;
    if (cfg.eta_mode == EtaMode::constant) eta_fixed = cfg.eta;
    ncx = nonconvex_schedule(problem.profile, cfg.alpha, cfg.lambda.lambda0, eta_fixed);
  }

  const bool s_driven = cfg.method == Method::frac_cvx_general &&
                        cfg.lambda.kind == LambdaSchedule::Kind::s_driven;
  double s = cfg.s0;

  Eigen::VectorXd x = x0;
  Eigen::VectorXd avg_sum = Eigen::VectorXd::Zero(problem.dim);
  double min_grad_pow = std::numeric_limits<double>::infinity();
  const double f0 = problem.value(x0);
  const double guard = f0 + 1e6 * (1.0 + std::abs(f0));

  for (int t = 0; t <= T; ++t) {
    const Eigen::VectorXd g = problem.gradient(x);

    IterateRecord rec;
    rec.t = t;
    rec.x = x;
    rec.f = problem.value(x);
    rec.grad_norm = g.norm();
    if (problem.optimum) rec.dist_sq = (x - *problem.optimum).squaredNorm();
    if (!std::isfinite(rec.f) || rec.f > guard) {
      std::ostringstream msg;
      msg << "run_descent[" << method_name(cfg.method) << "]: objective "
          << rec.f << " blew past the divergence guard at step " << t;
      throw divergence_error(msg.str());
    }
    if (cfg.method == Method::frac_nonconvex) {
      const double q = 1.0 + 1.0 / problem.profile.p;
      min_grad_pow = std::min(min_grad_pow, g.array().abs().pow(q).sum());
      rec.min_grad_pow = min_grad_pow;
    }
    if (is_convex_schedule(cfg.method) && t >= 1)
      rec.f_avg = problem.value(avg_sum / t);

    if (t == T) {
      trace.steps.push_back(std::move(rec));
      break;
    }

    // Terminal and direction.
    double lambda_t = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    double eta_theoretical = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd dir;

    switch (cfg.method) {
      case Method::gd: {
        dir = g;
        eta_theoretical = cfg.phi / prof.L;
        if (prof.mu > 0.0 && cfg.eta_mode == EtaMode::theoretical)
          rho = 1.0 - (2.0 - cfg.phi) * cfg.phi * prof.mu / prof.L;
        break;
      }
      case Method::frac_sc_separable:
      case Method::frac_sc_general: {
        lambda_t = cfg.lambda.at(t);
        const Eigen::VectorXd c = x + lambda_t * g;  // x - c = -lambda * grad
        const StepChoice choice =
            cfg.method == Method::frac_sc_separable
                ? eta_sc(k, lambda_t, cfg.phi, prof)
                : eta_sc_general(k, lambda_t, cfg.phi, prof);
        const double slack =
            cfg.method == Method::frac_sc_separable
                ? 1.0 - k.k1 * lambda_t - k.k2 * std::abs(lambda_t)
                : (cfg.phi / prof.L) * (1.0 - k.k1 * lambda_t) -
                      2.0 * k.k2 * std::abs(lambda_t) / prof.mu;
        if (!(slack > cfg.epsilon)) {
          std::ostringstream msg;
          msg << "run_descent[" << method_name(cfg.method)
              << "]: feasibility slack " << slack << " fell below epsilon = "
              << cfg.epsilon << " at step " << t;
          throw infeasible_error(msg.str());
        }
        dir = frac_grad_operator(problem, cfg.alpha, cfg.beta, c, x, cfg.quad);
        eta_theoretical = choice.eta;
        if (cfg.eta_mode == EtaMode::theoretical) rho = choice.rho;
        break;
      }
      case Method::frac_cvx_separable: {
        lambda_t = cfg.lambda.at(t);
        const Eigen::VectorXd c = x + lambda_t * g;
        eta_theoretical = eta_cvx_separable(k, lambda_t, prof.L);
        dir = frac_grad_operator(problem, cfg.alpha, cfg.beta, c, x, cfg.quad);
        break;
      }
      case Method::frac_cvx_general: {
        if (s_driven) {
          const SLambdaPair pair = lambda_from_s(s, k);
          const std::optional<double>& pick =
              cfg.prefer_negative_lambda
                  ? (pair.negative ? pair.negative : pair.positive)
                  : (pair.positive ? pair.positive : pair.negative);
          if (!pick)
            throw infeasible_error(
                "run_descent[frac-cvx-general]: the s coupling admits no lambda "
                "with these constants");
          lambda_t = *pick;
          eta_theoretical = eta_cvx_general(s, lambda_t, k, prof.L);
          s = s_sequence_next(s);
        } else {
          lambda_t = cfg.lambda.at(t);
          eta_theoretical = eta_cvx_general_unconstrained(lambda_t, k, prof.L);
        }
        const Eigen::VectorXd c = x + lambda_t * g;
        dir = frac_grad_operator(problem, cfg.alpha, cfg.beta, c, x, cfg.quad);
        break;
      }
      case Method::frac_nonconvex: {
        lambda_t = cfg.lambda.lambda0;
        Eigen::VectorXd c(problem.dim);
        for (int j = 0; j < problem.dim; ++j)
          c[j] = x[j] - nonconvex_terminal(g[j], lambda_t, problem.profile.p);
        dir = frac_grad_operator_p(problem, cfg.alpha, problem.profile.p, c, x,
                                   cfg.quad);
        eta_theoretical = ncx.eta;
        break;
      }
      case Method::at_cfgd: {
        const Eigen::VectorXd& c = (t < cfg.memory)
                                       ? cfg.history[t]
                                       : trace.steps[t - cfg.memory].x;
        dir = frac_grad_operator(problem, cfg.alpha, cfg.beta, c, x, cfg.quad);
        break;
      }
    }

    double eta;
    switch (cfg.eta_mode) {
      case EtaMode::theoretical: eta = eta_theoretical; break;
      case EtaMode::constant: eta = *cfg.eta; break;
      case EtaMode::optimal_quadratic: eta = line_search_eta(*problem.quadratic, g, dir); break;
    }
    if (!std::isfinite(eta))
      throw parameter_error("run_descent: no step size available for this method/mode");

    rec.eta = eta;
    rec.lambda = lambda_t;
    rec.rho = rho;
    trace.steps.push_back(std::move(rec));

    x -= eta * dir;
    if (is_convex_schedule(cfg.method)) avg_sum += x;
  }

  if (is_convex_schedule(cfg.method) && T >= 1) trace.average = avg_sum / T;
  return trace;
}

}  // namespace fracgrad
