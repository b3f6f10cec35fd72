#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pte/params.hpp"

namespace pte {

/// Seeded uniform stream. Identical (seed, stream) pairs reproduce the same
/// sequence bit for bit; distinct stream indices derive independent streams
/// from one user seed. Single-owner mutable state: use one stream per thread.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Poisson(lambda) variate by cdf-inversion sequential search. Rates above 30
/// are split into independent chunks of at most 30 (Poisson additivity), so
/// the search stays exact and underflow-free at any rate.
std::int64_t poisson_variate(RngStream& rng, double lambda);

/// n PTE draws: uniform -> mixing quantile -> Poisson variate.
std::vector<std::int64_t> sample(const PteParams& params, std::size_t n,
                                 RngStream& rng);

}  // namespace pte
