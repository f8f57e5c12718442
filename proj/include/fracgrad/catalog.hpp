#pragma once

#include <string>
#include <vector>

#include "fracgrad/problem.hpp"
#include "fracgrad/quadratic.hpp"

namespace fracgrad {

/// Named scalar test function with analytically known constants.  `convex`
/// gates the certificates that assume convexity.
struct ScalarCatalogEntry {
  std::string name;
  ScalarOracle oracle;
  SmoothnessProfile profile;
  bool convex = true;
};

/// Selectors: "quadratics", "polynomials", "holder", "nonconvex", "all".
/// Unknown selectors yield an empty catalog.
std::vector<ScalarCatalogEntry> scalar_catalog(const std::string& selector);

struct ProblemCatalogEntry {
  std::string name;
  ProblemOracle problem;
  Eigen::VectorXd x0;
};

/// Named multivariate problems; throws parameter_error for unknown names.
ProblemCatalogEntry catalog_problem(const std::string& name);
std::vector<std::string> catalog_problem_names();

/// Quadratic forms behind the quadratic catalog problems.
QuadraticForm catalog_quadratic(const std::string& name);

/// Dense polynomial oracle, coefficients in ascending order.
ScalarOracle make_polynomial_oracle(std::vector<double> coeffs, Interval domain);

/// Sum of one-dimensional parts; the coordinate restriction of part j is
/// part j itself plus the frozen contribution of the other coordinates.
ProblemOracle make_separable_problem(std::vector<ScalarOracle> parts,
                                     SmoothnessProfile profile);

}  // namespace fracgrad
