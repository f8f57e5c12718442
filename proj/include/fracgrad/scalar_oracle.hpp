#pragma once

#include <functional>
#include <limits>

namespace fracgrad {

/// Closed real interval; unbounded by default.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double t) const { return t >= lo && t <= hi; }
  double span() const { return hi - lo; }
};

/// Single-variable function bundle: value, first derivative and (optionally)
/// second derivative over a closed interval.
///
/// Callables must be reentrant; everything built on top of an oracle is pure
/// and may be invoked from many threads at once.
struct ScalarOracle {
  std::function<double(double)> value;
  std::function<double(double)> deriv1;
  std::function<double(double)> deriv2;  // leave empty when unavailable
  Interval domain;

  bool has_deriv2() const { return static_cast<bool>(deriv2); }
};

}  // namespace fracgrad
