#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nrd/pmf.hpp"

namespace nrd {

/// Conditional probability table P(output | condition tuple) over finite
/// alphabets. Rows are indexed by the mixed-radix encoding of the condition
/// tuple (first coordinate most significant); every tuple in the declared
/// product space has a row, so the kernel is a total function.
///
/// Conventions used throughout this library:
///   source   P(x_i | x_{i-1})          conditions (x_prev)
///   encoder  P(a_i | x_i, b_{i-1})     conditions (x, b_prev)
///   channel  P(b_i | a_i, b_{i-1})     conditions (a, b_prev)
///   decoder  P(y_i | b_i, y_{i-1})     conditions (b, y_prev)
///   reproduction P(y_i | x_i, y_{i-1}) conditions (x, y_prev)
class StochasticKernel {
 public:
  StochasticKernel() = default;

  /// All rows zero-initialized; fill with set_row()/set().
  StochasticKernel(std::vector<int> condition_sizes, int output_size);

  /// Rows listed in row-index order.
  static StochasticKernel from_rows(std::vector<int> condition_sizes, int output_size,
                                    const std::vector<std::vector<double>>& rows);

  /// P(out | c) = 1 iff out == map(c). `map` receives the decoded tuple.
  static StochasticKernel deterministic(std::vector<int> condition_sizes, int output_size,
                                        const std::function<int(std::span<const int>)>& map);

  /// Square single-condition kernel with P(i | i) = 1.
  static StochasticKernel identity(int size);

  int output_size() const { return out_size_; }
  int condition_arity() const { return static_cast<int>(cond_sizes_.size()); }
  const std::vector<int>& condition_sizes() const { return cond_sizes_; }
  int row_count() const { return rows_; }

  int row_index(std::span<const int> condition) const;
  void decode_row(int row, std::span<int> condition_out) const;

  double at(int out, int row) const { return table_[idx(out, row)]; }
  double operator()(int out, std::span<const int> condition) const {
    return at(out, row_index(condition));
  }
  double operator()(int out, int c0) const { return prob(out, {c0}); }
  double operator()(int out, int c0, int c1) const { return prob(out, {c0, c1}); }
  double operator()(int out, int c0, int c1, int c2) const { return prob(out, {c0, c1, c2}); }

  std::span<const double> row(int row) const {
    return {table_.data() + static_cast<std::size_t>(row) * out_size_,
            static_cast<std::size_t>(out_size_)};
  }
  Pmf row_pmf(int row) const;

  void set(int out, std::span<const int> condition, double value);
  void set_row(int row, std::span<const double> values);
  void set_row(std::span<const int> condition, std::span<const double> values);

  bool operator==(const StochasticKernel&) const = default;

  /// Max absolute entrywise difference; ShapeError if dimensions differ.
  double max_deviation(const StochasticKernel& other) const;

 private:
  double prob(int out, std::initializer_list<int> c) const {
    return operator()(out, std::span<const int>(c.begin(), c.size()));
  }
  std::size_t idx(int out, int row) const {
    return static_cast<std::size_t>(row) * out_size_ + out;
  }

  std::vector<int> cond_sizes_;
  int out_size_ = 0;
  int rows_ = 0;
  std::vector<double> table_;
};

/// One defective row found by validate_kernel.
struct KernelViolation {
  int row = 0;
  std::vector<int> condition;
  std::string message;
  double magnitude = 0.0;
};

/// Reports every row failing the Pmf invariants. Empty result means ok.
std::vector<KernelViolation> validate_kernel(const StochasticKernel& kernel,
                                             double sum_tolerance = Pmf::kSumTolerance);

}  // namespace nrd
