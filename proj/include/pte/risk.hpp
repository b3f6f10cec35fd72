#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pte/params.hpp"
#include "pte/rng.hpp"

namespace pte {

/// Claim severity law: Exponential(rate), Erlang(2, rate), or a discrete pmf
/// on the integer lattice 1..M.
class SeverityModel {
 public:
  enum class Kind { exponential, erlang2, discrete };

  static SeverityModel exponential(double rate);
  static SeverityModel erlang2(double rate);

  /// masses[i] is the probability of severity i+1. Must be non-negative and
  /// sum to one within 1e-12.
  static SeverityModel discrete(std::vector<double> masses);

  Kind kind() const { return kind_; }
  double rate() const { return rate_; }
  const std::vector<double>& masses() const { return masses_; }
  double mean() const;

 private:
  SeverityModel(Kind kind, double rate, std::vector<double> masses)
      : kind_(kind), rate_(rate), masses_(std::move(masses)) {}

  Kind kind_;
  double rate_;
  std::vector<double> masses_;
};

/// Aggregate loss S = Y_1 + ... + Y_X with PTE claim count X and severities
/// from `severity`; atom0 is the point mass P(S = 0) = pmf(frequency, 0).
struct CompoundDistribution {
  PteParams frequency;
  SeverityModel severity;
  double atom0;
};

CompoundDistribution make_compound(const PteParams& frequency,
                                   const SeverityModel& severity);

/// Density of S at y > 0 for Exponential(claim_rate) severities.
double compound_density_exp(const PteParams& frequency, double claim_rate,
                            double y);

/// Density of S at y > 0 for Erlang(2, claim_rate) severities. The sinh
/// factor is expanded into exponentials and folded into e^{-lambda y}, so
/// large y cannot overflow.
double compound_density_erlang2(const PteParams& frequency, double claim_rate,
                                double y);

/// Aggregate masses f_S(0..s_max) for a discrete severity via the mixed
/// Panjer recursion. The mixing moments E[lambda^i e^{-lambda}] of the
/// transmuted-exponential prior are available in closed form; the recursion
/// fills a triangular table over (moment order, aggregate value) scaled by
/// 1/i! so entries stay bounded.
Eigen::VectorXd compound_pmf_discrete(const PteParams& frequency,
                                      const SeverityModel& severity,
                                      std::int64_t s_max);

/// n Monte-Carlo draws of S; validation oracle for the closed forms.
std::vector<double> simulate_aggregate(const PteParams& frequency,
                                       const SeverityModel& severity,
                                       std::size_t n, RngStream& rng);

}  // namespace pte
