#include "fracgrad/schedules.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fracgrad/errors.hpp"

namespace fracgrad {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_phi(double phi) {
  if (!(phi > 0.0 && phi < 2.0))
    throw parameter_error("schedule: phi must lie in (0, 2)");
}
}  // namespace

double s_floor() { return std::sqrt(5.0) + 2.0; }

LambdaInterval feasible_lambda_interval(const BoundConstants& k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw parameter_error("feasible_lambda_interval: epsilon must lie in (0, 1)");
  const double hi = (k.k1 + k.k2 > 0.0) ? (1.0 - epsilon) / (k.k1 + k.k2) : kInf;
  const double lo = (k.k2 - k.k1 > 0.0) ? -(1.0 - epsilon) / (k.k2 - k.k1) : -kInf;
  return {lo, hi};
}

StepChoice eta_sc(const BoundConstants& k, double lambda, double phi,
                  const SmoothnessProfile& profile) {
  check_phi(phi);
  profile.validate();
  const double low = 1.0 - k.k1 * lambda - k.k2 * std::abs(lambda);
  const double high = 1.0 - k.k1 * lambda + k.k2 * std::abs(lambda);
  if (!(low > 0.0)) {
    std::ostringstream msg;
    msg << "eta_sc: requires 1 - K1*lambda - K2*|lambda| > 0 (got " << low << ")";
    throw infeasible_error(msg.str());
  }
  const double ratio = low / high;
  return {low * phi / (high * high * profile.L),
          1.0 - (2.0 - phi) * phi * (profile.mu / profile.L) * ratio * ratio};
}

StepChoice eta_sc_general(const BoundConstants& k, double lambda, double phi,
                          const SmoothnessProfile& profile) {
  check_phi(phi);
  profile.validate();
  if (!(profile.mu > 0.0))
    throw parameter_error("eta_sc_general: requires mu > 0");
  const double one_m = 1.0 - k.k1 * lambda;
  const double num = (phi / profile.L) * one_m -
                     2.0 * k.k2 * std::abs(lambda) / profile.mu;
  if (!(num > 0.0)) {
    std::ostringstream msg;
    msg << "eta_sc_general: requires (phi/L)(1 - K1*lambda) - 2*K2*|lambda|/mu > 0 "
           "(got " << num << ")";
    throw infeasible_error(msg.str());
  }
  const double high = one_m + k.k2 * std::abs(lambda);
  const double eta = num / (high * high);
  return {eta, 1.0 - (2.0 - phi) * profile.mu * one_m * eta};
}

double eta_cvx_separable(const BoundConstants& k, double lambda, double L) {
  if (!(L > 0.0)) throw parameter_error("eta_cvx_separable: L must be positive");
  const double one_m = 1.0 - lambda * k.k1;
  const double tail = std::abs(lambda) * k.k2;
  const double threshold = (std::sqrt(2.0) + 1.0) / (std::sqrt(2.0) - 1.0);
  if (!(one_m > threshold * tail)) {
    std::ostringstream msg;
    msg << "eta_cvx_separable: requires 1 - lambda*K1 > ((sqrt(2)+1)/(sqrt(2)-1)) "
           "* |lambda|*K2 (" << one_m << " vs " << threshold * tail << ")";
    throw infeasible_error(msg.str());
  }
  const double low = one_m - tail;
  const double high = one_m + tail;
  const double eta = (2.0 * low / (high * high) - 1.0 / low) / L;
  if (!(eta > 0.0))
    throw infeasible_error("eta_cvx_separable: schedule produced a non-positive step");
  return eta;
}

double s_condition_lhs(double s) { return s_condition_rhs(s) + 2.0 / s; }

double s_condition_rhs(double s) {
  return (s + 1.0) * (s + 1.0) / (s * s - 4.0 * s - 1.0);
}

double s_sequence_next(double s) {
  if (!(s > s_floor()) || !std::isfinite(s))
    throw parameter_error("s_sequence_next: requires s > sqrt(5) + 2");
  const double target = s_condition_rhs(s);
  double lo = s;
  double hi = s * 1e6;
  while (!(s_condition_lhs(hi) <= target)) {
    hi *= 10.0;
    if (!std::isfinite(hi))
      throw infeasible_error("s_sequence_next: no admissible successor found");
  }
  // lhs is strictly decreasing past the floor: keep lhs(hi) <= target < lhs(lo).
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (s_condition_lhs(mid) <= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

SLambdaPair lambda_from_s(double s, const BoundConstants& k) {
  if (!(s > s_floor()))
    throw parameter_error("lambda_from_s: requires s > sqrt(5) + 2");
  if (k.k2 == 0.0)
    throw parameter_error(
        "lambda_from_s: K2 = 0 admits no finite coupling; run with lambda = 0 "
        "(the method degenerates to gradient descent)");
  SLambdaPair out;
  const double denom_pos = k.k1 + s * k.k2;
  if (denom_pos > 0.0) out.positive = 1.0 / denom_pos;
  const double denom_neg = s * k.k2 - k.k1;
  if (denom_neg > 0.0) out.negative = -1.0 / denom_neg;
  return out;
}

double eta_cvx_general(double s, double lambda, const BoundConstants& k, double L) {
  if (!(s > s_floor()))
    throw parameter_error("eta_cvx_general: requires s > sqrt(5) + 2");
  if (!(L > 0.0)) throw parameter_error("eta_cvx_general: L must be positive");
  const double one_m = 1.0 - lambda * k.k1;
  if (!(one_m > 0.0))
    throw infeasible_error("eta_cvx_general: requires 1 - lambda*K1 > 0");
  return (s * s - 4.0 * s - 1.0) / ((s + 1.0) * (s + 1.0)) / (L * one_m);
}

double eta_cvx_general_unconstrained(double lambda, const BoundConstants& k,
                                     double L) {
  if (!(L > 0.0)) throw parameter_error("eta_cvx_general: L must be positive");
  const double one_m = 1.0 - lambda * k.k1;
  const double tail = std::abs(lambda) * k.k2;
  if (!(one_m > (s_floor() * tail))) {
    std::ostringstream msg;
    msg << "eta_cvx_general: requires 1 - lambda*K1 > (sqrt(5)+2)*|lambda|*K2 ("
        << one_m << " vs " << s_floor() * tail << ")";
    throw infeasible_error(msg.str());
  }
  const double high = one_m + tail;
  return (2.0 * (one_m - tail) / (high * high) - 1.0 / one_m) / L;
}

NonconvexSchedule nonconvex_schedule(const SmoothnessProfile& profile,
                                     double alpha, double lambda,
                                     std::optional<double> eta) {
  profile.validate();
  const double K = holder_K(profile.L, profile.p, alpha);
  const bool degenerate = (lambda == 0.0 && profile.p == 1.0);
  if (!degenerate) {
    if (!(lambda > 0.0) ||
        (K > 0.0 && !(lambda < std::pow(1.0 / K, 1.0 / profile.p)))) {
      std::ostringstream msg;
      msg << "nonconvex_schedule: requires 0 < lambda < (1/K)^(1/p) with K = "
          << K;
      throw infeasible_error(msg.str());
    }
  }
  const double lp = std::pow(lambda, 1.0 - profile.p);  // 1 when p = 1
  const double low = lp - K * lambda;
  const double high = lp + K * lambda;
  const double eta_max =
      std::pow((1.0 + profile.p) * low /
               (profile.L * std::pow(high, 1.0 + profile.p)), 1.0 / profile.p);
  const double chosen = eta ? *eta : 0.5 * eta_max;
  if (!(chosen > 0.0 && chosen < eta_max)) {
    std::ostringstream msg;
    msg << "nonconvex_schedule: eta must lie in (0, " << eta_max << ")";
    throw infeasible_error(msg.str());
  }
  const double psi =
      chosen * (low - profile.L / (1.0 + profile.p) *
                          std::pow(chosen, profile.p) *
                          std::pow(high, 1.0 + profile.p));
  return {K, eta_max, chosen, psi};
}

double nonconvex_terminal(double gradient_j, double lambda, double p) {
  if (gradient_j == 0.0) return 0.0;
  const double sgn = gradient_j > 0.0 ? 1.0 : -1.0;
  return -lambda * sgn * std::pow(std::abs(gradient_j), 1.0 / p);
}

}  // namespace fracgrad
