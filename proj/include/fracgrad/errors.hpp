#pragma once

#include <stdexcept>
#include <string>

namespace fracgrad {

/// Invalid mathematical parameter or malformed configuration.
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Hyperparameters violate a method's feasibility condition.  The message
/// names the condition that failed.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// The objective blew past the divergence guard during a run.
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracgrad
