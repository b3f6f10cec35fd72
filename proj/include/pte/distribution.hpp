#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pte/params.hpp"

namespace pte {

/// P(X = x). Exact two-term closed form; never negative.
double pmf(const PteParams& params, std::int64_t x);

/// log P(X = x), evaluated without forming the (1+theta)^{x+1} powers so it
/// stays finite and accurate for large x.
double log_pmf(const PteParams& params, std::int64_t x);

/// Probabilities p(0..x_max) computed through the ratio recursion from
/// p(0) = theta (1 + alpha + 2 theta) / ((1+theta)(1+2theta)).
/// Agrees elementwise with pmf() to ~1e-12 over the tested range.
Eigen::VectorXd pmf_recursive(const PteParams& params, std::int64_t x_max);

/// P(X <= x). Complementary to survival(x+1) exactly.
double cdf(const PteParams& params, std::int64_t x);

/// P(X >= x) (note the weak inequality); survival(0) == 1.
double survival(const PteParams& params, std::int64_t x);

/// Probability generating function E[t^X]. Throws std::domain_error on the
/// poles t = 1 + theta and t = 1 + 2 theta.
double pgf(const PteParams& params, double t);

/// r-th raw moment E[X^r]. Closed forms for r <= 4; for r >= 5 the
/// Hurwitz-Lerch series of each geometric branch, truncated when the
/// geometric tail bound drops below 1e-12.
double raw_moment(const PteParams& params, int r);

/// Mean, variance, skewness, kurtosis and coefficient of variation.
MomentSummary moments(const PteParams& params);

/// Mode(s) of the pmf, located by scanning the ratio recursion until it
/// drops below one. Returns two adjacent values when their probabilities
/// tie within 1e-14 absolute, otherwise a single value.
std::vector<std::int64_t> mode(const PteParams& params);

/// Series approximation of the pmf at the point k >= 1: the mixing density
/// g(k) plus `n_terms` correction terms built from the derivatives of
/// f(x) = x g(x) and the central moments of a gamma(shape k, scale 1)
/// variable. n_terms = 0 keeps the leading term only. An approximation,
/// not an exact evaluation.
double taylor_pmf(const PteParams& params, std::int64_t k, int n_terms);

/// Density of the transmuted-exponential mixing law at lambda >= 0.
double ted_pdf(const PteParams& params, double lambda);

/// Distribution function of the mixing law.
double ted_cdf(const PteParams& params, double lambda);

/// Exact inverse of ted_cdf on u in [0, 1); throws on u outside that range.
double ted_quantile(const PteParams& params, double u);

}  // namespace pte
