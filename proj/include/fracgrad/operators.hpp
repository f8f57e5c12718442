#pragma once

#include <Eigen/Core>

#include "fracgrad/caputo.hpp"
#include "fracgrad/problem.hpp"

namespace fracgrad {

/// Fractional descent operator on a scalar oracle:
///
///   op = CD^α_c f(x) · Γ(2-α)|x-c|^α / (x-c)
///        + β |x-c| · CD^{1+α}_c f(x) · Γ(2-α)|x-c|^α / (x-c)
///
/// At c = x this continues to f'(x) (the stationary-terminal continuation);
/// at α = 1 it continues to f'(x) + β f''(x)(x-c).  β != 0 requires a second
/// derivative.
double frac_grad_operator_1d(const ScalarOracle& f, double alpha, double beta,
                             double c, double x, const QuadratureConfig& quad);

/// Coordinate-wise extension: component j applies the 1-d operator to
/// coordinate_oracle(j, x) with terminal c_j.
Eigen::VectorXd frac_grad_operator(const ProblemOracle& problem, double alpha,
                                   double beta, const Eigen::VectorXd& c,
                                   const Eigen::VectorXd& x,
                                   const QuadratureConfig& quad);

/// Hölder-normalized operator (second term dropped, exponent tied to p):
///
///   component j = CD^α_{c_j} f_j(x_j) · Γ(2-α) |x_j-c_j|^{α-p+1} / (x_j-c_j).
///
/// At c_j = x_j the continuation is gradient_j when p = 1 and 0 when p < 1.
Eigen::VectorXd frac_grad_operator_p(const ProblemOracle& problem, double alpha,
                                     double p, const Eigen::VectorXd& c,
                                     const Eigen::VectorXd& x,
                                     const QuadratureConfig& quad);

}  // namespace fracgrad
