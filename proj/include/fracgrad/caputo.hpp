#pragma once

#include "fracgrad/scalar_oracle.hpp"

namespace fracgrad {

/// Euler gamma for z > 0.  Relative error is a few ulp, comfortably within
/// the 1e-12 contract.
double gamma_fn(double z);

/// Fractional order together with its terminal point.  Orders in (0,1)
/// integrate the first derivative of the oracle, orders in (1,2) the second.
/// Integer orders only arise as limits and are rejected.
struct CaputoSpec {
  double alpha;
  double terminal;
  int n;  // ceil(alpha), in {1, 2}

  CaputoSpec(double alpha, double terminal);
};

/// Node budget of the singular-endpoint rule.  Each derivative evaluation
/// costs exactly node_count oracle calls.
struct QuadratureConfig {
  int node_count = 64;
};

/// Caputo derivative of order spec.alpha with terminal spec.terminal,
///
///     sgn(x-c)^{n-1} / Γ(n-α) · ∫_c^x f^{(n)}(t) / |x-t|^{α-n+1} dt,
///
/// evaluated by substituting t = c + (x-c)u so the endpoint singularity
/// becomes the Jacobi weight (1-u)^{n-α-1}.  Exact (up to roundoff) for
/// polynomial f^{(n)} of degree < 2·node_count.
double caputo(const ScalarOracle& f, const CaputoSpec& spec, double x,
              const QuadratureConfig& quad);

/// The c -> x continuation of the normalized first-order factor: returns
/// f'(x).  Descent operators use this so that a stationary terminal
/// (c = x) is well defined and fixes stationary points.
double caputo_at_terminal_limit(const ScalarOracle& f, double alpha, double x);

/// zeta_x(t) = f(t) - f(x) - f'(x)(t - x).
double zeta(const ScalarOracle& f, double x, double t);

struct RelationResidual {
  double lhs;
  double rhs;
};

/// Both sides of the identity tying the Caputo derivative to the first
/// derivative:
///
///   lhs = CD_c f(x) - f'(x)(x-c) / (Γ(2-α)|x-c|^α)
///   rhs = -ζ_x(c) / (Γ(1-α)|x-c|^α)
///         - α·sgn(x-c)/Γ(1-α) · ∫_c^x ζ_x(t)/|x-t|^{α+1} dt
///
/// Each side runs its own quadrature so the pair serves as a certificate:
/// callers assert |lhs - rhs| below a tolerance.  The rhs integrand has an
/// integrable singularity at t = x (ζ_x(t) = O((x-t)^2)); with a second
/// derivative available, ζ_x(t)/|x-t|^2 is factored out and the remaining
/// |x-t|^{1-α} goes into the Jacobi weight.  Without one, the integral
/// falls back to adaptive subdivision cut off at |x-t| = 1e-8·|x-c|.
RelationResidual relation_residual(const ScalarOracle& f, double alpha,
                                   double c, double x,
                                   const QuadratureConfig& quad);

}  // namespace fracgrad
