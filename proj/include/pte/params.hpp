#pragma once

#include <stdexcept>
#include <string>

namespace pte {

/// Parameter pair of the Poisson-transmuted-exponential (PTE) count law.
/// `alpha` is the transmutation weight, `theta` the rate-like scale of the
/// mixing density. The closed box alpha in [-1, 1] is accepted; the endpoints
/// reduce the law to a single geometric distribution.
struct PteParams {
  double alpha;
  double theta;

  PteParams(double alpha_, double theta_) : alpha(alpha_), theta(theta_) {
    if (!(alpha >= -1.0 && alpha <= 1.0))
      throw std::domain_error("PteParams: alpha must lie in [-1, 1], got " +
                              std::to_string(alpha_));
    if (!(theta > 0.0))
      throw std::domain_error("PteParams: theta must be positive, got " +
                              std::to_string(theta_));
  }

  /// 1 - alpha, the weight of the slow geometric branch.
  double alpha_bar() const { return 1.0 - alpha; }
};

/// First four standardized moments plus the coefficient of variation.
/// `skewness` is mu3 / mu2^{3/2}; `kurtosis` is mu4 / mu2^2 (not excess).
struct MomentSummary {
  double mean;
  double variance;
  double skewness;
  double kurtosis;
  double cv;
};

}  // namespace pte
