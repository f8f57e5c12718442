#include "fracgrad/operators.hpp"

#include <cmath>

#include "fracgrad/errors.hpp"

namespace fracgrad {

double frac_grad_operator_1d(const ScalarOracle& f, double alpha, double beta,
                             double c, double x, const QuadratureConfig& quad) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("frac_grad_operator_1d: alpha must lie in (0, 1]");
  if (x == c) return f.deriv1(x);
  if (beta != 0.0 && !f.has_deriv2())
    throw parameter_error("frac_grad_operator_1d: beta != 0 requires a second derivative");

  const double h = x - c;
  if (alpha == 1.0) {
    double out = f.deriv1(x);
    if (beta != 0.0) out += beta * f.deriv2(x) * h;
    return out;
  }

  const double scale = gamma_fn(2.0 - alpha) * std::pow(std::abs(h), alpha) / h;
  double out = caputo(f, CaputoSpec(alpha, c), x, quad) * scale;
  if (beta != 0.0)
    out += beta * std::abs(h) * caputo(f, CaputoSpec(1.0 + alpha, c), x, quad) * scale;
  return out;
}

Eigen::VectorXd frac_grad_operator(const ProblemOracle& problem, double alpha,
                                   double beta, const Eigen::VectorXd& c,
                                   const Eigen::VectorXd& x,
                                   const QuadratureConfig& quad) {
  if (c.size() != x.size() || x.size() != problem.dim)
    throw parameter_error("frac_grad_operator: dimension mismatch");
  Eigen::VectorXd out(problem.dim);
  for (int j = 0; j < problem.dim; ++j) {
    const ScalarOracle fj = problem.coordinate_oracle(j, x);
    out[j] = frac_grad_operator_1d(fj, alpha, beta, c[j], x[j], quad);
  }
  return out;
}

Eigen::VectorXd frac_grad_operator_p(const ProblemOracle& problem, double alpha,
                                     double p, const Eigen::VectorXd& c,
                                     const Eigen::VectorXd& x,
                                     const QuadratureConfig& quad) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("frac_grad_operator_p: alpha must lie in (0, 1]");
  if (!(p > 0.0)) throw parameter_error("frac_grad_operator_p: p must be positive");
  if (c.size() != x.size() || x.size() != problem.dim)
    throw parameter_error("frac_grad_operator_p: dimension mismatch");

  Eigen::VectorXd out(problem.dim);
  for (int j = 0; j < problem.dim; ++j) {
    const ScalarOracle fj = problem.coordinate_oracle(j, x);
    const double h = x[j] - c[j];
    if (h == 0.0) {
      out[j] = (p == 1.0) ? fj.deriv1(x[j]) : 0.0;
    } else if (alpha == 1.0) {
      out[j] = fj.deriv1(x[j]) * std::pow(std::abs(h), 1.0 - p);
    } else {
      out[j] = caputo(fj, CaputoSpec(alpha, c[j]), x[j], quad) *
               gamma_fn(2.0 - alpha) * std::pow(std::abs(h), alpha - p + 1.0) / h;
    }
  }
  return out;
}

}  // namespace fracgrad
