#include "fracgrad/catalog.hpp"

#include <cmath>
#include <memory>

#include "fracgrad/errors.hpp"

namespace fracgrad {

namespace {

ScalarOracle quadratic_oracle(double a, double slope, Interval dom) {
  ScalarOracle f;
  f.value = [=](double t) { return 0.5 * a * t * t + slope * t; };
  f.deriv1 = [=](double t) { return a * t + slope; };
  f.deriv2 = [=](double) { return a; };
  f.domain = dom;
  return f;
}

// t^6/6 + t^2 : f'' = 5t^4 + 2
ScalarOracle sextic_oracle(Interval dom) {
  ScalarOracle f;
  f.value = [](double t) { return std::pow(t, 6) / 6.0 + t * t; };
  f.deriv1 = [](double t) { return std::pow(t, 5) + 2.0 * t; };
  f.deriv2 = [](double t) { return 5.0 * std::pow(t, 4) + 2.0; };
  f.domain = dom;
  return f;
}

// t^4 + t^2 : f'' = 12t^2 + 2
ScalarOracle quartic_oracle(Interval dom) {
  ScalarOracle f;
  f.value = [](double t) { return std::pow(t, 4) + t * t; };
  f.deriv1 = [](double t) { return 4.0 * std::pow(t, 3) + 2.0 * t; };
  f.deriv2 = [](double t) { return 12.0 * t * t + 2.0; };
  f.domain = dom;
  return f;
}

// |t|^{1+p}/(1+p): gradient sgn(t)|t|^p, Hölder smooth with L = 2^{1-p}.
// The second derivative blows up at 0, so it is left out.
ScalarOracle holder_oracle(double p, Interval dom) {
  ScalarOracle f;
  f.value = [p](double t) { return std::pow(std::abs(t), 1.0 + p) / (1.0 + p); };
  f.deriv1 = [p](double t) {
    if (t == 0.0) return 0.0;
    return (t > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(t), p);
  };
  f.domain = dom;
  return f;
}

// t^2/2 + (1 + cos 2t)/2 : f'' = 1 - 2 cos 2t in [-1, 3], non-convex,
// bounded below by 0.
ScalarOracle cosine_well_oracle(Interval dom) {
  ScalarOracle f;
  f.value = [](double t) { return 0.5 * t * t + 0.5 * (1.0 + std::cos(2.0 * t)); };
  f.deriv1 = [](double t) { return t - std::sin(2.0 * t); };
  f.deriv2 = [](double t) { return 1.0 - 2.0 * std::cos(2.0 * t); };
  f.domain = dom;
  return f;
}

void append_quadratics(std::vector<ScalarCatalogEntry>& out) {
  const Interval dom{-4.0, 4.0};
  out.push_back({"unit_quadratic", quadratic_oracle(1.0, 0.0, dom), {1.0, 1.0, 1.0}, true});
  out.push_back({"steep_quadratic", quadratic_oracle(20.0, 0.0, dom), {20.0, 20.0, 1.0}, true});
  out.push_back({"tilted_quadratic", quadratic_oracle(3.0, 2.0, dom), {3.0, 3.0, 1.0}, true});
}

void append_polynomials(std::vector<ScalarCatalogEntry>& out) {
  out.push_back({"sextic_well", sextic_oracle({-1.5, 1.5}),
                 {5.0 * std::pow(1.5, 4) + 2.0, 2.0, 1.0}, true});
  out.push_back({"quartic_well", quartic_oracle({-1.0, 1.0}), {14.0, 2.0, 1.0}, true});
}

void append_holder(std::vector<ScalarCatalogEntry>& out) {
  out.push_back({"holder_p05", holder_oracle(0.5, {-2.0, 2.0}),
                 {std::pow(2.0, 0.5), 0.0, 0.5}, true});
  out.push_back({"holder_p075", holder_oracle(0.75, {-2.0, 2.0}),
                 {std::pow(2.0, 0.25), 0.0, 0.75}, true});
}

void append_nonconvex(std::vector<ScalarCatalogEntry>& out) {
  out.push_back({"cosine_well", cosine_well_oracle({-6.0, 6.0}), {3.0, 0.0, 1.0}, false});
}

Eigen::MatrixXd givens(int n, int i, int j, double angle) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
  g(i, i) = std::cos(angle);
  g(j, j) = std::cos(angle);
  g(i, j) = -std::sin(angle);
  g(j, i) = std::sin(angle);
  return g;
}

// Fixed, well-mixed 5x5 rotation.
Eigen::MatrixXd rotation5() {
  Eigen::MatrixXd r = givens(5, 0, 1, 0.3);
  r = r * givens(5, 1, 2, 0.7);
  r = r * givens(5, 2, 3, 1.1);
  r = r * givens(5, 3, 4, 0.45);
  r = r * givens(5, 0, 4, 0.9);
  r = r * givens(5, 1, 3, 1.35);
  return r;
}

}  // namespace

std::vector<ScalarCatalogEntry> scalar_catalog(const std::string& selector) {
  std::vector<ScalarCatalogEntry> out;
  if (selector == "quadratics" || selector == "all") append_quadratics(out);
  if (selector == "polynomials" || selector == "all") append_polynomials(out);
  if (selector == "holder" || selector == "all") append_holder(out);
  if (selector == "nonconvex" || selector == "all") append_nonconvex(out);
  return out;
}

QuadraticForm catalog_quadratic(const std::string& name) {
  QuadraticForm q;
  if (name == "fig1_quad") {
    // 10x^2 + y^2
    q.A = Eigen::Vector2d(20.0, 2.0).asDiagonal();
    q.b = Eigen::VectorXd::Zero(2);
    q.convention = QuadraticConvention::half;
  } else if (name == "sep_quad3") {
    q.A = Eigen::Vector3d(8.0, 3.0, 1.0).asDiagonal();
    q.b = Eigen::VectorXd::Zero(3);
    q.convention = QuadraticConvention::half;
  } else if (name == "fig3_quad") {
    Eigen::VectorXd d(5);
    d << 10, 1, 1, 1, 1;
    q.A = d.asDiagonal();
    q.b = Eigen::VectorXd::Zero(5);
    q.convention = QuadraticConvention::plain;
  } else if (name == "fig4_quad") {
    Eigen::VectorXd d(5);
    d << 10, 1, 7, 9, 4;
    q.A = d.asDiagonal();
    q.b = Eigen::VectorXd::Zero(5);
    q.convention = QuadraticConvention::plain;
  } else if (name == "rotated5") {
    Eigen::VectorXd d(5);
    d << 20, 14, 9, 5, 2;
    const Eigen::MatrixXd r = rotation5();
    Eigen::MatrixXd a = r * d.asDiagonal() * r.transpose();
    q.A = 0.5 * (a + a.transpose());
    q.b = Eigen::VectorXd::Zero(5);
    q.convention = QuadraticConvention::half;
  } else {
    throw parameter_error("catalog_quadratic: unknown name " + name);
  }
  return q;
}

ProblemCatalogEntry catalog_problem(const std::string& name) {
  ProblemCatalogEntry entry;
  entry.name = name;
  if (name == "fig1_quad") {
    entry.problem = catalog_quadratic(name).to_problem();
    entry.x0 = Eigen::Vector2d(1.0, -10.0);
  } else if (name == "sep_quad3") {
    entry.problem = catalog_quadratic(name).to_problem();
    entry.x0 = Eigen::Vector3d(2.0, -1.0, 3.0);
  } else if (name == "fig3_quad" || name == "fig4_quad") {
    entry.problem = catalog_quadratic(name).to_problem();
    entry.x0 = Eigen::VectorXd(5);
    entry.x0 << 1, -10, 5, 8, -6;
  } else if (name == "rotated5") {
    entry.problem = catalog_quadratic(name).to_problem();
    entry.x0 = Eigen::VectorXd(5);
    entry.x0 << 1, -2, 3, -4, 5;
  } else if (name == "sep_sextic3") {
    const Interval dom{-1.6, 1.6};
    std::vector<ScalarOracle> parts{sextic_oracle(dom), sextic_oracle(dom),
                                    sextic_oracle(dom)};
    const double L = 5.0 * std::pow(1.6, 4) + 2.0;
    entry.problem = make_separable_problem(std::move(parts), {L, 2.0, 1.0});
    entry.problem.optimum = Eigen::VectorXd::Zero(3);
    entry.problem.optimum_value = 0.0;
    entry.x0 = Eigen::Vector3d(1.0, -1.2, 0.8);
  } else if (name == "holder_p05" || name == "holder_p1") {
    const double p = (name == "holder_p05") ? 0.5 : 1.0;
    const Interval dom{-50.0, 50.0};
    std::vector<ScalarOracle> parts;
    for (int i = 0; i < 3; ++i) {
      ScalarOracle f = holder_oracle(p, dom);
      if (p == 1.0) f.deriv2 = [](double) { return 1.0; };
      parts.push_back(std::move(f));
    }
    const double mu = (p == 1.0) ? 1.0 : 0.0;
    entry.problem = make_separable_problem(std::move(parts),
                                           {std::pow(2.0, 1.0 - p), mu, p});
    entry.problem.optimum = Eigen::VectorXd::Zero(3);
    entry.problem.optimum_value = 0.0;
    entry.x0 = Eigen::Vector3d(1.5, -2.0, 0.7);
  } else if (name == "noncvx_well2") {
    const Interval dom{-20.0, 20.0};
    std::vector<ScalarOracle> parts{cosine_well_oracle(dom), cosine_well_oracle(dom)};
    entry.problem = make_separable_problem(std::move(parts), {3.0, 0.0, 1.0});
    entry.problem.optimum_value = 0.0;  // lower bound; minima are off-origin
    entry.x0 = Eigen::Vector2d(2.5, -1.7);
  } else {
    throw parameter_error("catalog_problem: unknown name " + name);
  }
  return entry;
}

std::vector<std::string> catalog_problem_names() {
  return {"fig1_quad", "sep_quad3", "fig3_quad", "fig4_quad", "rotated5",
          "sep_sextic3", "holder_p05", "holder_p1", "noncvx_well2"};
}

ScalarOracle make_polynomial_oracle(std::vector<double> coeffs, Interval domain) {
  if (coeffs.empty()) throw parameter_error("make_polynomial_oracle: empty coefficients");
  auto c = std::make_shared<std::vector<double>>(std::move(coeffs));
  auto horner = [c](double t, int order) {
    double acc = 0.0;
    for (int i = static_cast<int>(c->size()) - 1; i >= order; --i) {
      double coeff = (*c)[i];
      for (int k = 0; k < order; ++k) coeff *= (i - k);
      acc = acc * t + coeff;
    }
    return acc;
  };
  ScalarOracle f;
  f.value = [horner](double t) { return horner(t, 0); };
  f.deriv1 = [horner](double t) { return horner(t, 1); };
  f.deriv2 = [horner](double t) { return horner(t, 2); };
  f.domain = domain;
  return f;
}

ProblemOracle make_separable_problem(std::vector<ScalarOracle> parts,
                                     SmoothnessProfile profile) {
  if (parts.empty()) throw parameter_error("make_separable_problem: no parts");
  auto shared = std::make_shared<std::vector<ScalarOracle>>(std::move(parts));
  const int dim = static_cast<int>(shared->size());

  ProblemOracle p;
  p.dim = dim;
  p.profile = profile;
  p.separable = true;
  p.value = [shared](const Eigen::VectorXd& x) {
    double acc = 0.0;
    for (int i = 0; i < x.size(); ++i) acc += (*shared)[i].value(x[i]);
    return acc;
  };
  p.gradient = [shared](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(x.size());
    for (int i = 0; i < x.size(); ++i) g[i] = (*shared)[i].deriv1(x[i]);
    return g;
  };
  p.coordinate_oracle = [shared](int j, const Eigen::VectorXd& x) {
    double rest = 0.0;
    for (int i = 0; i < x.size(); ++i)
      if (i != j) rest += (*shared)[i].value(x[i]);
    const ScalarOracle& part = (*shared)[j];
    ScalarOracle f;
    f.value = [part, rest](double y) { return part.value(y) + rest; };
    f.deriv1 = part.deriv1;
    f.deriv2 = part.deriv2;
    f.domain = part.domain;
    return f;
  };
  return p;
}

}  // namespace fracgrad
