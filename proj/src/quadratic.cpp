#include "fracgrad/quadratic.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "fracgrad/errors.hpp"

namespace fracgrad {

void QuadraticForm::validate() const {
  if (A.rows() != A.cols() || A.rows() == 0)
    throw parameter_error("QuadraticForm: A must be square and non-empty");
  if (b.size() != A.rows())
    throw parameter_error("QuadraticForm: b dimension mismatch");
  if (!A.isApprox(A.transpose(), 1e-12))
    throw parameter_error("QuadraticForm: A must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw parameter_error("QuadraticForm: A must be positive definite");
}

Eigen::MatrixXd QuadraticForm::hessian() const {
  return convention == QuadraticConvention::half ? A : Eigen::MatrixXd(2.0 * A);
}

double QuadraticForm::value(const Eigen::VectorXd& x) const {
  const double quad = x.dot(A * x);
  const double scaled = convention == QuadraticConvention::half ? 0.5 * quad : quad;
  return scaled + b.dot(x) + y0;
}

Eigen::VectorXd QuadraticForm::gradient(const Eigen::VectorXd& x) const {
  return hessian() * x + b;
}

Eigen::VectorXd QuadraticForm::optimum() const {
  return hessian().ldlt().solve(-b);
}

std::pair<double, double> QuadraticForm::extreme_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hessian());
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

ProblemOracle QuadraticForm::to_problem() const {
  validate();
  auto shared = std::make_shared<QuadraticForm>(*this);
  const Eigen::MatrixXd H = hessian();
  auto h_shared = std::make_shared<Eigen::MatrixXd>(H);

  ProblemOracle p;
  p.dim = static_cast<int>(A.rows());
  p.value = [shared](const Eigen::VectorXd& x) { return shared->value(x); };
  p.gradient = [shared](const Eigen::VectorXd& x) { return shared->gradient(x); };
  p.coordinate_oracle = [shared, h_shared](int j, const Eigen::VectorXd& x) {
    // f_{j,x}(y) = f(x + (y - x_j) e_j): a 1-d quadratic with curvature H_jj.
    const double gj = (*h_shared * x + shared->b)[j];
    const double hjj = (*h_shared)(j, j);
    const double xj = x[j];
    const double fx = shared->value(x);
    ScalarOracle f;
    f.value = [=](double y) {
      const double d = y - xj;
      return fx + gj * d + 0.5 * hjj * d * d;
    };
    f.deriv1 = [=](double y) { return gj + hjj * (y - xj); };
    f.deriv2 = [=](double) { return hjj; };
    return f;
  };
  auto [mu, L] = extreme_eigenvalues();
  p.profile = {L, mu, 1.0};
  p.optimum = optimum();
  p.optimum_value = value(*p.optimum);
  p.quadratic = QuadraticModel{H, b};
  p.separable = H.isDiagonal(1e-14);
  return p;
}

FracLinearOperator closed_form_operator(const QuadraticForm& q, double alpha,
                                        double beta, double delta) {
  q.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("closed_form_operator: alpha must lie in (0, 1)");
  if (beta > 0.0)
    throw parameter_error("closed_form_operator: requires beta <= 0");

  const Eigen::MatrixXd H = q.hessian();
  const double L = q.extreme_eigenvalues().second;
  const double g = gamma_ratio(alpha);

  FracLinearOperator out;
  out.delta = delta;
  out.lambda = delta / ((beta - g) * L);
  out.d = (1.0 - (delta / L) * H.diagonal().array()).matrix();
  out.a_prime = out.d.asDiagonal() * H;
  out.b_prime = out.d.asDiagonal() * q.b;
  std::tie(out.mu_prime, out.l_prime) = quadratic_form_bounds(out.a_prime);
  return out;
}

std::pair<double, double> quadratic_form_bounds(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw parameter_error("quadratic_form_bounds: matrix must be square");
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

ConditionReport condition_compare(const QuadraticForm& q, double alpha,
                                  double beta, double delta) {
  const auto [mu, L] = q.extreme_eigenvalues();
  const FracLinearOperator op = closed_form_operator(q, alpha, beta, delta);
  ConditionReport rep;
  rep.kappa_a = L / mu;
  rep.mu_prime = op.mu_prime;
  rep.l_prime = op.l_prime;
  rep.feasible = op.d.minCoeff() > 0.0 && op.mu_prime > 0.0;
  rep.kappa_a_prime = rep.feasible ? op.l_prime / op.mu_prime
                                   : std::numeric_limits<double>::infinity();
  rep.frac_faster = rep.feasible && rep.kappa_a_prime < rep.kappa_a;
  return rep;
}

double optimal_eta_quadratic(const QuadraticForm& q, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& d) {
  if (d.size() != x.size() || x.size() != q.A.rows())
    throw parameter_error("optimal_eta_quadratic: dimension mismatch");
  if (d.squaredNorm() == 0.0)
    throw parameter_error("optimal_eta_quadratic: direction must be nonzero");
  const Eigen::MatrixXd H = q.hessian();
  return (H * x + q.b).dot(d) / d.dot(H * d);
}

IterateTrace run_quadratic_frac(const QuadraticForm& q, double alpha, double beta,
                                double delta, int horizon,
                                const Eigen::VectorXd& x0) {
  const FracLinearOperator op = closed_form_operator(q, alpha, beta, delta);
  if (!(op.d.minCoeff() > 0.0)) {
    std::ostringstream msg;
    msg << "run_quadratic_frac: D has a non-positive entry (min "
        << op.d.minCoeff() << "); reduce delta";
    throw infeasible_error(msg.str());
  }
  if (!(op.mu_prime > 0.0))
    throw infeasible_error("run_quadratic_frac: A' is not positive definite");
  if (x0.size() != q.A.rows())
    throw parameter_error("run_quadratic_frac: x0 dimension mismatch");

  const double eta = 1.0 / op.l_prime;
  const double rho = 1.0 - op.mu_prime / op.l_prime;
  const Eigen::VectorXd xstar = q.optimum();

  IterateTrace trace;
  trace.method = Method::frac_sc_separable;  // closed-form fractional route
  trace.steps.reserve(horizon + 1);

  Eigen::VectorXd x = x0;
  for (int t = 0; t <= horizon; ++t) {
    IterateRecord rec;
    rec.t = t;
    rec.x = x;
    rec.f = q.value(x);
    rec.grad_norm = q.gradient(x).norm();
    rec.dist_sq = (x - xstar).squaredNorm();
    if (t == horizon) {
      trace.steps.push_back(std::move(rec));
      break;
    }
    rec.eta = eta;
    rec.lambda = op.lambda;
    rec.rho = rho;
    const double prev = rec.dist_sq;
    trace.steps.push_back(std::move(rec));

    x -= eta * (op.a_prime * x + op.b_prime);
    const double next = (x - xstar).squaredNorm();
    if (next > rho * prev + 1e-12 * (1.0 + prev)) {
      std::ostringstream msg;
      msg << "run_quadratic_frac: contraction bound violated at step " << t
          << " (" << next << " > " << rho << " * " << prev << ")";
      throw std::logic_error(msg.str());
    }
  }
  return trace;
}

}  // namespace fracgrad
