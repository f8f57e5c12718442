#include "fracgrad/bounds.hpp"

#include <cmath>

#include "fracgrad/errors.hpp"
#include "fracgrad/operators.hpp"

namespace fracgrad {

void SmoothnessProfile::validate() const {
  if (!(L > 0.0) || mu < 0.0 || L < mu || !(p > 0.0))
    throw parameter_error("SmoothnessProfile: requires L >= mu >= 0, L > 0, p > 0");
}

double gamma_ratio(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("gamma_ratio: alpha must lie in (0, 1]");
  return (1.0 - alpha) / (2.0 - alpha);
}

BoundConstants k_constants(const SmoothnessProfile& profile, double alpha,
                           double beta) {
  profile.validate();
  if (profile.p != 1.0)
    throw parameter_error("k_constants: sandwich constants require p = 1");
  const double g = gamma_ratio(alpha);

  BoundConstants out;
  out.gamma = g;
  if (beta >= 0.0) {
    out.branch = BetaBranch::non_negative;
    out.k1 = 0.5 * (profile.L + profile.mu) * (beta - g);
    out.k2 = 0.5 * (profile.L - profile.mu) * (beta + g);
  } else {
    out.branch = BetaBranch::non_positive;
    const double gab = beta - g;
    out.k1 = 0.5 * (profile.L + profile.mu) * gab;
    out.k2 = 0.5 * (profile.mu - profile.L) * gab;
  }
  return out;
}

double holder_K(double L, double p, double alpha) {
  if (!(L > 0.0) || !(p > 0.0))
    throw parameter_error("holder_K: requires L > 0 and p > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("holder_K: alpha must lie in (0, 1]");
  return L * (1.0 - alpha) / (1.0 + p - alpha);
}

namespace {

double first_order_term(const ScalarOracle& f, double alpha, double c, double x) {
  const double h = x - c;
  return f.deriv1(x) * h / (gamma_fn(2.0 - alpha) * std::pow(std::abs(h), alpha));
}

}  // namespace

double certify_smooth_bound(const ScalarOracle& f, const SmoothnessProfile& profile,
                            double alpha, double c, double x,
                            const QuadratureConfig& quad) {
  profile.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("certify_smooth_bound: alpha must lie in (0, 1)");
  const double bound = profile.L /
                       (gamma_fn(1.0 - alpha) * (1.0 + profile.p - alpha)) *
                       std::pow(std::abs(x - c), 1.0 + profile.p - alpha);
  const double dev = first_order_term(f, alpha, c, x) -
                     caputo(f, CaputoSpec(alpha, c), x, quad);
  return bound - std::abs(dev);
}

double certify_uniform_convex_bound(const ScalarOracle& f,
                                    const SmoothnessProfile& profile,
                                    double alpha, double c, double x,
                                    const QuadratureConfig& quad) {
  profile.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("certify_uniform_convex_bound: alpha must lie in (0, 1)");
  const double bound = profile.mu /
                       (gamma_fn(1.0 - alpha) * (1.0 + profile.p - alpha)) *
                       std::pow(std::abs(x - c), 1.0 + profile.p - alpha);
  const double dev = first_order_term(f, alpha, c, x) -
                     caputo(f, CaputoSpec(alpha, c), x, quad);
  return dev - bound;
}

Order2Margins certify_order2_bound(const ScalarOracle& f,
                                   const SmoothnessProfile& profile,
                                   double alpha, double c, double x,
                                   const QuadratureConfig& quad) {
  profile.validate();
  if (!(alpha > 1.0 && alpha < 2.0))
    throw parameter_error("certify_order2_bound: alpha must lie in (1, 2)");
  const double scale = std::pow(std::abs(x - c), 2.0 - alpha) / gamma_fn(3.0 - alpha);
  const double cd = caputo(f, CaputoSpec(alpha, c), x, quad);
  return {profile.L * scale - cd, cd - profile.mu * scale};
}

double certify_sandwich(const ScalarOracle& f, const BoundConstants& constants,
                        double alpha, double beta, double c, double x,
                        const QuadratureConfig& quad) {
  const double op = frac_grad_operator_1d(f, alpha, beta, c, x, quad);
  const double dev = std::abs(op - f.deriv1(x) - constants.k1 * (x - c));
  return constants.k2 * std::abs(x - c) - dev;
}

double smoothing_coefficient(int k, double alpha, double beta) {
  if (k < 2) throw parameter_error("smoothing_coefficient: requires k >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("smoothing_coefficient: alpha must lie in (0, 1]");
  const double lg2a = std::lgamma(2.0 - alpha);
  const double lgk = std::lgamma(static_cast<double>(k));
  const double first = std::exp(lg2a + lgk - std::lgamma(k + 1.0 - alpha));
  const double second = std::exp(lg2a + lgk - std::lgamma(k - alpha));
  return first + beta * second;
}

}  // namespace fracgrad
