#include "nrd/bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nrd/bsms.hpp"

namespace nrd {

void BoundParams::validate() const {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::domain_error("BoundParams: lambda must lie in (0, 1]");
  }
  if (!(f_norm > 0.0)) throw std::domain_error("BoundParams: f_norm must be positive");
  if (!(m_h > 0.0)) throw std::domain_error("BoundParams: m_h must be positive");
  if (!(delta > 0.0)) throw std::domain_error("BoundParams: delta must be positive");
  if (n < 0) throw std::domain_error("BoundParams: n must be >= 0");
}

long long BoundParams::validity_threshold() const {
  return static_cast<long long>(std::floor(2.0 * f_norm * m_h / (lambda * delta)));
}

std::optional<double> hoeffding_bound(const BoundParams& params) {
  params.validate();
  const double nn = static_cast<double>(params.n);
  if (!(nn > 2.0 * params.f_norm * params.m_h / (params.lambda * params.delta))) {
    return std::nullopt;
  }
  const double fm = params.f_norm * params.m_h;
  const double inner = (nn + 1.0) * params.delta - 2.0 * fm / params.lambda;
  const double exponent =
      -(params.lambda * params.lambda * inner * inner) / (2.0 * (nn + 1.0) * fm * fm);
  return std::clamp(std::exp(exponent), 0.0, 1.0);
}

double bsms_minorization_lambda(double p, double alpha, double beta) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("bsms_minorization_lambda: p must lie in (0, 1)");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw std::domain_error("bsms_minorization_lambda: alpha, beta must lie in [0, 1]");
  }
  const double source_min = std::min(p, 1.0 - p);
  const double kernel_min = std::min(std::min(alpha, beta), std::min(1.0 - alpha, 1.0 - beta));
  return source_min * kernel_min;
}

std::vector<BoundPoint> bound_curve(double p, double D, double delta,
                                    const std::vector<long long>& n_grid) {
  if (!std::is_sorted(n_grid.begin(), n_grid.end())) {
    throw std::invalid_argument("bound_curve: horizon grid must be ascending");
  }
  const RdPoint pt = bsms_nrdf(BsmsSource(p), D);
  const double lambda = bsms_minorization_lambda(p, pt.alpha, pt.beta);
  std::vector<BoundPoint> out;
  out.reserve(n_grid.size());
  for (long long n : n_grid) {
    BoundParams params{lambda, 1.0, 1.0, delta, n};
    out.push_back(BoundPoint{n, lambda, hoeffding_bound(params)});
  }
  return out;
}

}  // namespace nrd
