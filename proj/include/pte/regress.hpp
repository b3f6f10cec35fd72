#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "pte/params.hpp"

namespace pte {

/// Design matrix (first column all ones for the intercept) and non-negative
/// integer responses.
struct RegressionData {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  std::vector<std::string> column_names;  // size X.cols()

  /// Loads a headed CSV, takes `response` as y and `covariates` as columns
  /// 2..s of X after the intercept. Non-numeric cells and missing columns
  /// raise DataFormatError.
  static RegressionData load_csv(const std::string& path,
                                 const std::string& response,
                                 const std::vector<std::string>& covariates);
};

struct CoefficientRow {
  std::string name;
  double estimate;
  double se;
  double t_value;
  double p_value;  // two-sided, asymptotic normal reference
};

struct RegressionFit {
  double nu = 2.0;               // dispersion parameter, in [1, 3]
  Eigen::VectorXd beta;          // log-link coefficients
  Eigen::MatrixXd cov;           // (s+1)x(s+1), order (beta_1..beta_s, nu)
  std::vector<CoefficientRow> rows;  // beta rows then the nu row
  double loglik = 0.0;
  double aic = 0.0;
  bool converged = true;
  int iterations = 0;
};

/// Mean-parametrized PTE law: alpha = 2 - nu, theta = nu / (2 mu); the
/// resulting mean is exactly mu. Throws std::domain_error outside
/// nu in [1, 3], mu > 0.
PteParams reparam_to_pte(double nu, double mu);

/// sum_i log pmf(reparam_to_pte(nu, exp(x_i' beta)), y_i). Linear predictors
/// are clamped to +-700 before exponentiation; `clamped`, when given, is set
/// if any clamp fired.
double loglik_regression(double nu, const Eigen::VectorXd& beta,
                         const RegressionData& data, bool* clamped = nullptr);

/// Full PTE regression fit: nu mapped to (1, 3) by a scaled sigmoid, beta
/// unconstrained, analytic gradients, Poisson-regression start values.
/// Standard errors come from the finite-difference Hessian of the (nu, beta)
/// log-likelihood at the optimum. Boundary or clamped optima are flagged
/// non-converged.
RegressionFit fit_regression(const RegressionData& data,
                             std::optional<Eigen::VectorXd> init_beta =
                                 std::nullopt,
                             int max_iterations = 1000);

struct PoissonRegressionFit {
  Eigen::VectorXd beta;
  Eigen::MatrixXd cov;
  std::vector<CoefficientRow> rows;
  double loglik = 0.0;
  double aic = 0.0;
  bool converged = true;
  int iterations = 0;
};

/// Poisson log-link MLE by iteratively reweighted least squares.
PoissonRegressionFit fit_poisson_baseline(const RegressionData& data);

/// exp(x_row' beta) under a fit.
double predict_mean(const RegressionFit& fit, const Eigen::VectorXd& x_row);

}  // namespace pte
