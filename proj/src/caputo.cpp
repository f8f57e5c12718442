#include "fracgrad/caputo.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "fracgrad/errors.hpp"
#include "fracgrad/gauss_jacobi.hpp"

namespace fracgrad {

double gamma_fn(double z) {
  if (!(z > 0.0))
    throw parameter_error("gamma_fn: argument must be positive");
  return std::tgamma(z);
}

CaputoSpec::CaputoSpec(double alpha_, double terminal_)
    : alpha(alpha_), terminal(terminal_) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw parameter_error("CaputoSpec: order must lie in (0, 2]");
  if (alpha == std::floor(alpha))
    throw parameter_error(
        "CaputoSpec: integer orders are limit cases; evaluate at a nearby "
        "fractional order instead");
  n = static_cast<int>(std::ceil(alpha));
}

namespace {

// Recursive Simpson with Richardson acceptance test.
double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double tol) {
  const double fa = g(a);
  const double fb = g(b);
  const double m = 0.5 * (a + b);
  const double fm = g(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double caputo(const ScalarOracle& f, const CaputoSpec& spec, double x,
              const QuadratureConfig& quad) {
  if (quad.node_count < 8)
    throw parameter_error("caputo: node_count must be at least 8");
  const double c = spec.terminal;
  if (x == c)
    throw parameter_error(
        "caputo: x equals the terminal; the value there is a limit, use "
        "caputo_at_terminal_limit");
  if (!f.domain.contains(x) || !f.domain.contains(c)) {
    std::ostringstream msg;
    msg << "caputo: x = " << x << " and terminal = " << c
        << " must both lie in the oracle domain [" << f.domain.lo << ", "
        << f.domain.hi << "]";
    throw parameter_error(msg.str());
  }
  const int n = spec.n;
  if (n == 2 && !f.has_deriv2())
    throw parameter_error("caputo: orders above 1 require a second derivative");

  const auto& g = (n == 1) ? f.deriv1 : f.deriv2;
  const double a = n - spec.alpha - 1.0;  // (1-u) exponent after t = c+(x-c)u
  const auto& rule = jacobi_rule(quad.node_count, a);

  const double h = x - c;
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * g(c + h * rule.nodes[i]);

  const double sign = (n == 2 && h < 0.0) ? -1.0 : 1.0;  // sgn(x-c)^{n-1}
  return sign / gamma_fn(n - spec.alpha) * h * std::pow(std::abs(h), a) * acc;
}

double caputo_at_terminal_limit(const ScalarOracle& f, double alpha, double x) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("caputo_at_terminal_limit: alpha must lie in (0, 1)");
  if (!f.domain.contains(x))
    throw parameter_error("caputo_at_terminal_limit: x outside oracle domain");
  return f.deriv1(x);
}

double zeta(const ScalarOracle& f, double x, double t) {
  if (!f.domain.contains(x) || !f.domain.contains(t))
    throw parameter_error("zeta: points must lie in the oracle domain");
  return f.value(t) - f.value(x) - f.deriv1(x) * (t - x);
}

RelationResidual relation_residual(const ScalarOracle& f, double alpha,
                                   double c, double x,
                                   const QuadratureConfig& quad) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("relation_residual: alpha must lie in (0, 1)");
  if (x == c)
    throw parameter_error("relation_residual: x must differ from the terminal");

  const double h = x - c;
  const double habs = std::abs(h);
  const double sgn = (h > 0.0) ? 1.0 : -1.0;

  const double lhs = caputo(f, CaputoSpec(alpha, c), x, quad) -
                     f.deriv1(x) * h / (gamma_fn(2.0 - alpha) * std::pow(habs, alpha));

  // ∫_c^x ζ_x(t) / |x-t|^{α+1} dt
  double integral;
  if (f.has_deriv2()) {
    // Factor ζ_x(t)/(x-t)^2 (smooth, -> f''(x)/2 at t = x) and absorb the
    // remaining |x-t|^{1-α} into the Jacobi weight.
    const auto& rule = jacobi_rule(quad.node_count, 1.0 - alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = rule.nodes[i];
      const double t = c + h * u;
      const double dt = x - t;
      double ratio;
      if (std::abs(dt) < 1e-6 * habs) {
        ratio = 0.5 * f.deriv2(x + (t - x) / 3.0);
      } else {
        ratio = zeta(f, x, t) / (dt * dt);
      }
      acc += rule.weights[i] * ratio;
    }
    integral = h * std::pow(habs, 1.0 - alpha) * acc;
  } else {
    // Adaptive subdivision on the raw integrand, stopping short of the
    // singular endpoint.
    const double cut = 1e-8 * habs;
    const auto integrand = [&](double t) {
      const double d = std::abs(x - t);
      return zeta(f, x, t) / std::pow(d, alpha + 1.0);
    };
    integral = adaptive_simpson(integrand, c, x - sgn * cut, 1e-12);
  }

  const double rhs = -zeta(f, x, c) / (gamma_fn(1.0 - alpha) * std::pow(habs, alpha)) -
                     alpha * sgn / gamma_fn(1.0 - alpha) * integral;
  return {lhs, rhs};
}

}  // namespace fracgrad
