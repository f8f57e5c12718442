#pragma once

#include "fracgrad/caputo.hpp"

namespace fracgrad {

/// Smoothness and convexity data of an objective.  mu = 0 means merely
/// convex; p is the Hölder exponent (p = 1 recovers the standard notions).
/// Constants are always supplied analytically, never estimated.
struct SmoothnessProfile {
  double L = 1.0;
  double mu = 0.0;
  double p = 1.0;

  void validate() const;
};

enum class BetaBranch { non_negative, non_positive };

/// Constants of the sandwich bound
///
///     |op(x) - f'(x) - K1 (x-c)| <= K2 |x-c|
///
/// for the fractional descent operator on L-smooth, mu-strongly-convex
/// functions.  K2 >= 0 on both branches; K1 changes sign with the branch
/// algebra.  The branches coincide at beta = 0.
struct BoundConstants {
  double gamma = 0.0;  // (1-alpha)/(2-alpha)
  double k1 = 0.0;
  double k2 = 0.0;
  BetaBranch branch = BetaBranch::non_negative;
};

/// (1-alpha)/(2-alpha) for alpha in (0, 1].
double gamma_ratio(double alpha);

/// Branch-correct sandwich constants.  Requires p = 1.
///   beta >= 0:  K1 = ((L+mu)/2)(beta-gamma),  K2 = ((L-mu)/2)(beta+gamma)
///   beta <= 0:  with g = beta - gamma:
///               K1 = ((L+mu)/2) g,            K2 = ((mu-L)/2) g
BoundConstants k_constants(const SmoothnessProfile& profile, double alpha,
                           double beta);

/// K = L(1-alpha)/(1+p-alpha), the Hölder-smooth deviation constant of the
/// p-normalized operator.
double holder_K(double L, double p, double alpha);

/// Signed certificate margins.  A certificate passes when its margin is
/// >= -tol; returning the margin lets the harness report worst-case slack.

/// Hölder-smooth upper bound on the deviation of CD from the normalized
/// first-derivative term; margin = bound - |deviation|.
double certify_smooth_bound(const ScalarOracle& f, const SmoothnessProfile& profile,
                            double alpha, double c, double x,
                            const QuadratureConfig& quad);

/// Uniform-convexity lower bound; margin = deviation - bound.
double certify_uniform_convex_bound(const ScalarOracle& f,
                                    const SmoothnessProfile& profile,
                                    double alpha, double c, double x,
                                    const QuadratureConfig& quad);

struct Order2Margins {
  double upper;
  double lower;
};

/// Two-sided bound on the order-(1,2) derivative of an L-smooth,
/// mu-strongly-convex oracle:
///   upper = L/Γ(3-α)·|x-c|^{2-α} - CD^α,  lower = CD^α - mu/Γ(3-α)·|x-c|^{2-α}.
Order2Margins certify_order2_bound(const ScalarOracle& f,
                                   const SmoothnessProfile& profile,
                                   double alpha, double c, double x,
                                   const QuadratureConfig& quad);

/// Sandwich certificate for the descent operator itself;
/// margin = K2|x-c| - |op - f'(x) - K1(x-c)|.
double certify_sandwich(const ScalarOracle& f, const BoundConstants& constants,
                        double alpha, double beta, double c, double x,
                        const QuadratureConfig& quad);

/// Taylor-term damping coefficient of the smoothed objective,
///   Γ(2-α)Γ(k)/Γ(k+1-α) + β·Γ(2-α)Γ(k)/Γ(k-α),   k >= 2.
/// Diagnostic only.
double smoothing_coefficient(int k, double alpha, double beta);

}  // namespace fracgrad
