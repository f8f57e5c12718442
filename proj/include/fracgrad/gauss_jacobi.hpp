#pragma once

#include <vector>

namespace fracgrad {

/// Quadrature rule for the weighted integral
///
///     ∫_0^1 g(u) (1-u)^a du  ≈  Σ_i w_i g(u_i),    a > -1,
///
/// exact for polynomial g of degree < 2n.  The endpoint singularity of the
/// weight is absorbed by the rule, so g only ever needs to be smooth.
struct JacobiRule {
  std::vector<double> nodes;    // strictly inside (0, 1)
  std::vector<double> weights;  // all positive
};

/// Returns the n-point rule for exponent `a` on the (1-u) factor, built by
/// Golub-Welsch on the Jacobi recurrence.  Rules are memoized process-wide
/// behind a lock; the returned reference stays valid for the process
/// lifetime.
const JacobiRule& jacobi_rule(int n, double a);

}  // namespace fracgrad
