#include "nrd/pair_table.hpp"

#include <algorithm>
#include <cmath>

#include "nrd/errors.hpp"

namespace nrd {

PairTable::PairTable(int rows, int cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ <= 0 || cols_ <= 0 ||
      values_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw ShapeError("PairTable: dimension mismatch");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw ShapeError("PairTable: entries must be finite and >= 0");
  }
}

PairTable PairTable::hamming(int size) {
  std::vector<double> v(static_cast<std::size_t>(size) * size, 1.0);
  for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i) * size + i] = 0.0;
  return PairTable(size, size, std::move(v));
}

double PairTable::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

}  // namespace nrd
