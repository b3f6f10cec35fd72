#pragma once

#include <Eigen/Dense>
#include <functional>

namespace pte {

struct BfgsOptions {
  int max_iterations = 500;
  double gradient_tolerance = 1e-8;  // Euclidean norm of the gradient
};

struct BfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  Eigen::VectorXd gradient;
  bool converged = false;
  int iterations = 0;
};

/// Objective callback: returns f(x) and fills the gradient.
using ObjectiveFn =
    std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// Quasi-Newton (BFGS) minimizer with Armijo backtracking. Small and
/// deterministic; intended for the low-dimensional likelihood surfaces here.
BfgsResult minimize_bfgs(const ObjectiveFn& fn, Eigen::VectorXd x0,
                         const BfgsOptions& options = {});

}  // namespace pte
