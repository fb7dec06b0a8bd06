#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lmpc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Bad or inconsistent user-supplied configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An optimization that should be feasible by construction was not, or a
/// checked invariant failed.
class InfeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The numerical backend failed to produce a usable answer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hull input does not span the ambient space.
class DegenerateHullError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lmpc
