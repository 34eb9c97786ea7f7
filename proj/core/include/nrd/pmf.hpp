#pragma once

#include <span>
#include <vector>

namespace nrd {

/// Probability mass function over a finite alphabet {0, ..., size()-1}.
///
/// Entries must lie in [0, 1] and sum to 1 within kSumTolerance. The
/// constructor does not validate; call validate() at trust boundaries.
class Pmf {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Pmf() = default;
  explicit Pmf(std::vector<double> probabilities);

  static Pmf uniform(int size);
  static Pmf point_mass(int size, int at);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  std::span<const double> values() const { return p_; }

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate(double sum_tolerance = kSumTolerance) const;
  bool is_valid(double sum_tolerance = kSumTolerance) const noexcept;

  auto begin() const { return p_.begin(); }
  auto end() const { return p_.end(); }

 private:
  std::vector<double> p_;
};

}  // namespace nrd
