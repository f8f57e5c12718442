#pragma once

#include <Eigen/Dense>
#include <utility>

#include "fracgrad/descent.hpp"
#include "fracgrad/problem.hpp"

namespace fracgrad {

/// Which quadratic is meant by (A, b, y0):
///   half:   f = 1/2 x'Ax + b'x + y0   (Hessian A)
///   plain:  f =     x'Ax + b'x + y0   (Hessian 2A)
/// The flag keeps factor-of-2 errors out of L, mu and the lambda/Delta
/// coupling.
enum class QuadraticConvention { half, plain };

struct QuadraticForm {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  double y0 = 0.0;
  QuadraticConvention convention = QuadraticConvention::half;

  void validate() const;  // symmetric and positive definite
  Eigen::MatrixXd hessian() const;
  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
  Eigen::VectorXd optimum() const;  // -H^{-1} b
  /// (mu, L): extreme eigenvalues of the Hessian.
  std::pair<double, double> extreme_eigenvalues() const;
  /// Full oracle with exact coordinate restrictions, profile, optimum and
  /// quadratic model attached.
  ProblemOracle to_problem() const;
};

/// The linear operator the fractional step reduces to on a quadratic when
/// the terminal is coupled as x - c = -lambda grad f with
/// lambda = Delta / ((beta - gamma) L):
///
///   op(x) = A' x + b',   A' = D H,  b' = D b,  D = I - (Delta/L) diag(H).
///
/// A non-symmetric A' means the operator field is not the gradient of any
/// function.  mu'/L' are the quadratic-form bounds of A'.
struct FracLinearOperator {
  Eigen::VectorXd d;         // diagonal of D
  Eigen::MatrixXd a_prime;   // D * H
  Eigen::VectorXd b_prime;   // D * b
  double mu_prime = 0.0;
  double l_prime = 0.0;
  double lambda = 0.0;       // terminal coupling Delta/((beta-gamma)L)
  double delta = 0.0;
};

/// Closed form of the operator.  Requires beta <= 0 and alpha in (0, 1).
/// D entries may come out non-positive; convergence claims then do not
/// apply (run_quadratic_frac rejects such Deltas).
FracLinearOperator closed_form_operator(const QuadraticForm& q, double alpha,
                                        double beta, double delta);

/// (mu', L') = extreme eigenvalues of the symmetric part (M + M')/2, the
/// tight constants with mu'||y||^2 <= y'My <= L'||y||^2.
std::pair<double, double> quadratic_form_bounds(const Eigen::MatrixXd& m);

struct ConditionReport {
  double kappa_a = 0.0;
  double kappa_a_prime = 0.0;
  bool frac_faster = false;  // strictly smaller condition number
  bool feasible = true;      // all D entries positive and mu' > 0
  double mu_prime = 0.0;
  double l_prime = 0.0;
};

/// Condition numbers of H and A' and the comparison verdict.
ConditionReport condition_compare(const QuadraticForm& q, double alpha,
                                  double beta, double delta);

/// Exact line-search step along -d: eta* = <Hx + b, d> / <d, Hd>.
double optimal_eta_quadratic(const QuadraticForm& q, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& d);

/// Runs x_{t+1} = x_t - (1/L')(A'x_t + b') for T steps.  Requires every D
/// entry positive.  Each step is checked against the guaranteed contraction
/// ||x_{t+1}-x*||^2 <= (1 - mu'/L')||x_t-x*||^2 (up to roundoff slack);
/// the trace records rho = 1 - mu'/L'.
IterateTrace run_quadratic_frac(const QuadraticForm& q, double alpha, double beta,
                                double delta, int horizon,
                                const Eigen::VectorXd& x0);

}  // namespace fracgrad
