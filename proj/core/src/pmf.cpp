#include "nrd/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nrd {

Pmf::Pmf(std::vector<double> probabilities) : p_(std::move(probabilities)) {}

Pmf Pmf::uniform(int size) {
  if (size <= 0) throw std::invalid_argument("Pmf::uniform: size must be positive");
  return Pmf(std::vector<double>(static_cast<std::size_t>(size), 1.0 / size));
}

Pmf Pmf::point_mass(int size, int at) {
  if (size <= 0) throw std::invalid_argument("Pmf::point_mass: size must be positive");
  if (at < 0 || at >= size) throw std::invalid_argument("Pmf::point_mass: atom out of range");
  std::vector<double> p(static_cast<std::size_t>(size), 0.0);
  p[static_cast<std::size_t>(at)] = 1.0;
  return Pmf(std::move(p));
}

void Pmf::validate(double sum_tolerance) const {
  if (p_.empty()) throw std::invalid_argument("Pmf: empty support");
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const double v = p_[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw std::invalid_argument("Pmf: entry " + std::to_string(i) + " = " +
                                  std::to_string(v) + " outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > sum_tolerance) {
    throw std::invalid_argument("Pmf: entries sum to " + std::to_string(sum) +
                                ", expected 1 within " + std::to_string(sum_tolerance));
  }
}

bool Pmf::is_valid(double sum_tolerance) const noexcept {
  if (p_.empty()) return false;
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= sum_tolerance;
}

}  // namespace nrd
