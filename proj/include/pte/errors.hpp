#pragma once

#include <stdexcept>

namespace pte {

/// Sample moments are incompatible with the PTE law (negative discriminant,
/// equal moments, or a solution outside the parameter box).
class InfeasibleMoments : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Zero proportion / mean statistics are incompatible with the PTE law.
class InfeasibleStatistics : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Observed information matrix is not positive definite.
class SingularInformation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A chi-square cell has zero expected count.
class EmptyCell : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Regression design matrix does not have full column rank.
class RankDeficientDesign : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV and count files); message carries a line number.
class DataFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model record file fails schema or version validation.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pte
