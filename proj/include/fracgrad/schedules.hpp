#pragma once

#include <optional>

#include "fracgrad/bounds.hpp"

namespace fracgrad {

/// Smallest admissible s for the convex s-sequence, sqrt(5) + 2.
double s_floor();

/// Open interval of lambdas satisfying 1 - K1 λ - K2 |λ| > epsilon,
/// solved piecewise on λ >= 0 and λ <= 0.  Endpoints are ±inf when a side
/// is unconstrained.
struct LambdaInterval {
  double lo;
  double hi;
};
LambdaInterval feasible_lambda_interval(const BoundConstants& k, double epsilon);

/// Step size together with the per-step squared-distance contraction factor
/// the schedule guarantees.
struct StepChoice {
  double eta;
  double rho;
};

/// Strongly convex, separable route:
///   eta = (1 - K1λ - K2|λ|) φ / ((1 - K1λ + K2|λ|)^2 L)
///   rho = 1 - (2-φ)φ (mu/L) ((1 - K1λ - K2|λ|)/(1 - K1λ + K2|λ|))^2
StepChoice eta_sc(const BoundConstants& k, double lambda, double phi,
                  const SmoothnessProfile& profile);

/// Strongly convex, general route:
///   eta = ((φ/L)(1 - K1λ) - 2 K2|λ|/mu) / (1 - K1λ + K2|λ|)^2
///   rho = 1 - (2-φ) mu (1 - K1λ) eta
StepChoice eta_sc_general(const BoundConstants& k, double lambda, double phi,
                          const SmoothnessProfile& profile);

/// Convex, separable route (constant lambda):
///   eta = (1/L) [ 2(1-λK1-|λ|K2)/(1-λK1+|λ|K2)^2 - 1/(1-λK1-|λ|K2) ]
/// requires 1 - λK1 > ((√2+1)/(√2-1)) |λ| K2.
double eta_cvx_separable(const BoundConstants& k, double lambda, double L);

/// Telescoping condition sides for the convex s-sequence.
double s_condition_lhs(double s);  // (s+1)^2/(s^2-4s-1) + 2/s
double s_condition_rhs(double s);  // (s+1)^2/(s^2-4s-1)

/// Minimal s' > s_floor() with s_condition_lhs(s') <= s_condition_rhs(s),
/// found by bisection on [s, s*1e6] to absolute tolerance 1e-10.  The
/// returned value always satisfies the condition as computed, and the
/// sequence it generates is nondecreasing.
double s_sequence_next(double s);

/// Both solutions of 1 - λ K1 = s |λ| K2; a branch is absent when its sign
/// constraint cannot be met.  K2 = 0 admits no finite coupling.
struct SLambdaPair {
  std::optional<double> positive;
  std::optional<double> negative;
};
SLambdaPair lambda_from_s(double s, const BoundConstants& k);

/// Convex, general route under the coupling 1 - λK1 = s|λ|K2:
///   eta = (1/(L(1-λK1))) (s^2-4s-1)/(s+1)^2
double eta_cvx_general(double s, double lambda, const BoundConstants& k, double L);

/// Same schedule without the s-coupling (direct form); used when lambda is
/// held constant, e.g. the λ = 0 degeneration to plain gradient descent.
double eta_cvx_general_unconstrained(double lambda, const BoundConstants& k,
                                     double L);

/// Hölder non-convex schedule.  For step size eta in (0, eta_max) the
/// per-step progress constant is
///   psi = eta (λ^{1-p} - Kλ - (L/(1+p)) eta^p (λ^{1-p} + Kλ)^{1+p}) > 0.
/// Default eta is eta_max / 2.  λ = 0 is admitted only for p = 1, where the
/// schedule degenerates to gradient descent.
struct NonconvexSchedule {
  double K;
  double eta_max;
  double eta;
  double psi;
};
NonconvexSchedule nonconvex_schedule(const SmoothnessProfile& profile,
                                     double alpha, double lambda,
                                     std::optional<double> eta = std::nullopt);

/// Signed terminal offset x_j - c_j = -λ sgn(g_j) |g_j|^{1/p}.  The
/// magnitude is the schedule's; the gradient-opposing sign keeps the p = 1
/// case consistent with the λ-guided terminal rule.
double nonconvex_terminal(double gradient_j, double lambda, double p);

}  // namespace fracgrad
