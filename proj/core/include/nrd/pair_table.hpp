#pragma once

#include <vector>

namespace nrd {

/// Nonnegative real table indexed by a pair of finite-alphabet symbols.
/// Used for single-letter distortion rho(x, y) and channel-use cost
/// c(x, y_prev).
class PairTable {
 public:
  PairTable() = default;
  PairTable(int rows, int cols, std::vector<double> values);

  /// Hamming distortion: 0 on the diagonal, 1 off it.
  static PairTable hamming(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double max_value() const;

  bool operator==(const PairTable&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> values_;
};

using DistortionSpec = PairTable;
using CostTable = PairTable;

}  // namespace nrd
