#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pte {

/// Observed count data as (value, frequency) rows, canonicalized to distinct
/// values in ascending order, plus the derived sample statistics used by the
/// estimators.
struct CountDataset {
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  std::int64_t n = 0;  // total frequency
  double m1 = 0.0;     // first sample moment
  double m2 = 0.0;     // second sample moment
  double p0 = 0.0;     // sample proportion of zeros

  double mean() const { return m1; }
  std::int64_t max_value() const;

  /// Builds from (value, frequency) pairs; duplicates are merged. Throws
  /// std::invalid_argument on negative values/frequencies or empty data.
  static CountDataset from_pairs(
      std::vector<std::pair<std::int64_t, std::int64_t>> pairs);

  /// Builds from raw counts, one observation each.
  static CountDataset from_counts(const std::vector<std::int64_t>& counts);

  /// Loads a file containing either `value,frequency` rows (optional header)
  /// or one raw count per line. Throws DataFormatError with a line number.
  static CountDataset load(const std::string& path);
};

}  // namespace pte
