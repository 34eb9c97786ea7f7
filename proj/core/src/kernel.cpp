#include "nrd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nrd/errors.hpp"

namespace nrd {

StochasticKernel::StochasticKernel(std::vector<int> condition_sizes, int output_size)
    : cond_sizes_(std::move(condition_sizes)), out_size_(output_size) {
  if (out_size_ <= 0) throw ShapeError("StochasticKernel: output size must be positive");
  std::size_t rows = 1;
  for (int s : cond_sizes_) {
    if (s <= 0) throw ShapeError("StochasticKernel: condition alphabet size must be positive");
    rows *= static_cast<std::size_t>(s);
  }
  rows_ = static_cast<int>(rows);
  table_.assign(rows * static_cast<std::size_t>(out_size_), 0.0);
}

StochasticKernel StochasticKernel::from_rows(std::vector<int> condition_sizes, int output_size,
                                             const std::vector<std::vector<double>>& rows) {
  StochasticKernel k(std::move(condition_sizes), output_size);
  if (static_cast<int>(rows.size()) != k.rows_) {
    throw ShapeError("StochasticKernel::from_rows: expected " + std::to_string(k.rows_) +
                     " rows, got " + std::to_string(rows.size()));
  }
  for (int r = 0; r < k.rows_; ++r) k.set_row(r, rows[static_cast<std::size_t>(r)]);
  return k;
}

StochasticKernel StochasticKernel::deterministic(
    std::vector<int> condition_sizes, int output_size,
    const std::function<int(std::span<const int>)>& map) {
  StochasticKernel k(std::move(condition_sizes), output_size);
  std::vector<int> cond(static_cast<std::size_t>(k.condition_arity()));
  for (int r = 0; r < k.rows_; ++r) {
    k.decode_row(r, cond);
    const int out = map(cond);
    if (out < 0 || out >= output_size) {
      throw ShapeError("StochasticKernel::deterministic: map value out of range");
    }
    k.table_[k.idx(out, r)] = 1.0;
  }
  return k;
}

StochasticKernel StochasticKernel::identity(int size) {
  return deterministic({size}, size, [](std::span<const int> c) { return c[0]; });
}

int StochasticKernel::row_index(std::span<const int> condition) const {
  if (condition.size() != cond_sizes_.size()) {
    throw ShapeError("StochasticKernel: condition arity mismatch");
  }
  int row = 0;
  for (std::size_t i = 0; i < cond_sizes_.size(); ++i) {
    const int c = condition[i];
    if (c < 0 || c >= cond_sizes_[i]) {
      throw std::out_of_range("StochasticKernel: condition symbol out of range");
    }
    row = row * cond_sizes_[i] + c;
  }
  return row;
}

void StochasticKernel::decode_row(int row, std::span<int> condition_out) const {
  if (condition_out.size() != cond_sizes_.size()) {
    throw ShapeError("StochasticKernel: condition arity mismatch");
  }
  for (std::size_t i = cond_sizes_.size(); i-- > 0;) {
    condition_out[i] = row % cond_sizes_[i];
    row /= cond_sizes_[i];
  }
}

Pmf StochasticKernel::row_pmf(int r) const {
  auto s = row(r);
  return Pmf(std::vector<double>(s.begin(), s.end()));
}

void StochasticKernel::set(int out, std::span<const int> condition, double value) {
  table_[idx(out, row_index(condition))] = value;
}

void StochasticKernel::set_row(int r, std::span<const double> values) {
  if (static_cast<int>(values.size()) != out_size_) {
    throw ShapeError("StochasticKernel::set_row: row length mismatch");
  }
  std::copy(values.begin(), values.end(),
            table_.begin() + static_cast<std::size_t>(r) * out_size_);
}

void StochasticKernel::set_row(std::span<const int> condition, std::span<const double> values) {
  set_row(row_index(condition), values);
}

double StochasticKernel::max_deviation(const StochasticKernel& other) const {
  if (cond_sizes_ != other.cond_sizes_ || out_size_ != other.out_size_) {
    throw ShapeError("StochasticKernel::max_deviation: dimension mismatch");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    dev = std::max(dev, std::abs(table_[i] - other.table_[i]));
  }
  return dev;
}

std::vector<KernelViolation> validate_kernel(const StochasticKernel& kernel,
                                             double sum_tolerance) {
  std::vector<KernelViolation> out;
  std::vector<int> cond(static_cast<std::size_t>(kernel.condition_arity()));
  for (int r = 0; r < kernel.row_count(); ++r) {
    auto row = kernel.row(r);
    double sum = 0.0;
    double worst_entry = 0.0;
    bool entry_bad = false;
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        entry_bad = true;
        worst_entry = std::max(worst_entry, std::isfinite(v) ? std::abs(v) : 1.0);
      }
      sum += v;
    }
    kernel.decode_row(r, cond);
    if (entry_bad) {
      out.push_back({r, cond, "entry outside [0, 1]", worst_entry});
      continue;
    }
    const double defect = std::abs(sum - 1.0);
    if (defect > sum_tolerance) {
      out.push_back({r, cond, "row sums to " + std::to_string(sum), defect});
    }
  }
  return out;
}

}  // namespace nrd
