#include "fracgrad/gauss_jacobi.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

// Nodes and weights for the weight (1-x)^a (1+x)^b on [-1,1], mapped to the
// (1-u)^a weight on [0,1] (b = 0 throughout).  Symmetric tridiagonal Jacobi
// matrix from the monic three-term recurrence; eigenvalues are the nodes and
// the squared first eigenvector components give the weights.
JacobiRule build_rule(int n, double a) {
  if (n < 1) throw parameter_error("jacobi_rule: node count must be positive");
  if (!(a > -1.0)) throw parameter_error("jacobi_rule: weight exponent must exceed -1");

  const double b = 0.0;
  const double ab = a + b;

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  jac(0, 0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    jac(k, k) = (b * b - a * a) / (t * (t + 2.0));
    double beta_k;
    if (k == 1) {
      beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) /
               (t * t * (t + 1.0) * (t - 1.0));
    }
    const double off = std::sqrt(beta_k);
    jac(k, k - 1) = off;
    jac(k - 1, k) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  if (es.info() != Eigen::Success)
    throw parameter_error("jacobi_rule: eigen decomposition failed");

  // mu0 = ∫_{-1}^{1} (1-x)^a (1+x)^b dx; the 2^{-a-1} factor maps to [0,1].
  const double mu0 = std::pow(2.0, ab + 1.0) *
                     std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  const double scale = std::pow(2.0, -a - 1.0);

  JacobiRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (es.eigenvalues()(i) + 1.0);
    rule.weights[i] = scale * mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const JacobiRule& jacobi_rule(int n, double a) {
  static std::mutex lock;
  static std::map<std::pair<int, double>, std::unique_ptr<JacobiRule>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[{n, a}];
  if (!slot) slot = std::make_unique<JacobiRule>(build_rule(n, a));
  return *slot;
}

}  // namespace fracgrad
