#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pte/dataset.hpp"
#include "pte/params.hpp"

namespace pte {

enum class FitMethod { moments, proportion_moment, mle };

std::string to_string(FitMethod method);

struct FitResult {
  PteParams params;
  FitMethod method;
  double loglik = 0.0;
  std::optional<Eigen::Vector2d> se;    // (se_alpha, se_theta), MLE only
  std::optional<Eigen::Matrix2d> cov;   // inverse observed information
  bool converged = true;
  int iterations = 0;
};

/// Method-of-moments estimate from the raw sample moments (m1, m2).
/// Throws InfeasibleMoments when the discriminant 4 m1 + 9 m1^2 - 4 m2 is
/// negative, m1 == m2, or the solution leaves the parameter box.
PteParams fit_moments_from(double m1, double m2);
FitResult fit_moments(const CountDataset& data);

/// Estimate matching the sample proportion of zeros and the sample mean.
/// Throws InfeasibleStatistics on a negative radicand, a degenerate
/// denominator, or an out-of-domain solution.
PteParams fit_proportion_moment_from(double p0, double xbar);
FitResult fit_proportion_moment(const CountDataset& data);

/// Log-likelihood sum freq(x) * log_pmf(params, x).
double loglik(const PteParams& params, const CountDataset& data);

/// Analytic gradient (d l / d alpha, d l / d theta).
Eigen::Vector2d score(const PteParams& params, const CountDataset& data);

/// Maximum likelihood fit. The parameters are optimized unconstrained through
/// alpha = tanh(a/2) and theta = exp(b); converged requires the transformed
/// gradient norm to fall below 1e-8 away from the box boundary. On the
/// iteration cap the best iterate is returned with converged = false.
FitResult fit_mle(const CountDataset& data,
                  std::optional<PteParams> init = std::nullopt,
                  int max_iterations = 500);

struct ObservedInformation {
  Eigen::Matrix2d matrix;      // negative Hessian of loglik
  Eigen::Matrix2d covariance;  // its inverse
  Eigen::Vector2d se;          // sqrt of the covariance diagonal
};

/// Closed-form negative Hessian at `params` (normally the MLE). Throws
/// SingularInformation when the matrix is not positive definite.
ObservedInformation observed_information(const PteParams& params,
                                         const CountDataset& data);

/// Integer cells [edges[i], edges[i+1]-1]; the final cell starts at
/// edges.back() and is open-ended (absorbs the tail) when open_tail is set,
/// otherwise the singleton {edges.back()}.
struct Grouping {
  std::vector<std::int64_t> edges;
  bool open_tail = true;
};

/// One cell per distinct observed value, final cell open/closed per flag.
Grouping default_grouping(const CountDataset& data, bool open_tail = true);

struct ChiSquareResult {
  struct Cell {
    std::int64_t lo;
    std::int64_t hi;  // inclusive; ignored when open
    bool open;
    double observed;
    double expected;
  };
  double statistic = 0.0;
  std::vector<Cell> cells;
};

/// Pearson chi-square of `data` against a discrete model given by its pmf
/// and survival (P(X >= x)) functions. Throws EmptyCell when an expected
/// count is zero.
ChiSquareResult gof_chi_square(
    const std::function<double(std::int64_t)>& model_pmf,
    const std::function<double(std::int64_t)>& model_survival,
    const CountDataset& data, const Grouping& grouping);

ChiSquareResult gof_chi_square(const PteParams& params,
                               const CountDataset& data,
                               const Grouping& grouping);

/// Akaike information criterion -2 loglik + 2k.
double aic(double loglik, int k);

/// Poisson helpers for the baseline comparison (lambda-hat = sample mean).
double poisson_pmf(double lambda, std::int64_t x);
double poisson_survival(double lambda, std::int64_t x);
double poisson_loglik(double lambda, const CountDataset& data);

}  // namespace pte
