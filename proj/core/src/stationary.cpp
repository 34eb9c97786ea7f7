#include "nrd/stationary.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "nrd/errors.hpp"

namespace nrd {

Pmf stationary_distribution(const StochasticKernel& kernel) {
  if (kernel.condition_arity() != 1 || kernel.condition_sizes()[0] != kernel.output_size()) {
    throw ShapeError("stationary_distribution: kernel must be a square one-step transition");
  }
  const int n = kernel.output_size();

  Eigen::MatrixXd kt(n, n);  // K^T - I
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      kt(j, i) = kernel.at(j, i) - (i == j ? 1.0 : 0.0);
    }
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(kt);
  lu.setThreshold(1e-10);
  if (lu.rank() < n - 1) {
    throw MultiplicityError("stationary_distribution: stationary distribution is not unique (rank " +
                            std::to_string(lu.rank()) + " of " + std::to_string(n) + ")");
  }

  // Stack the normalization row and solve the overdetermined system.
  Eigen::MatrixXd a(n + 1, n);
  a.topRows(n) = kt;
  a.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b(n) = 1.0;
  Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);

  std::vector<double> p(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = pi(i);
    if (v < 0.0) {
      if (v < -1e-10) {
        throw MultiplicityError("stationary_distribution: solve produced a negative mass " +
                                std::to_string(v));
      }
      v = 0.0;
    }
    p[static_cast<std::size_t>(i)] = v;
    sum += v;
  }
  for (double& v : p) v /= sum;

  // Fixed-point residual check in max norm.
  double residual = 0.0;
  for (int j = 0; j < n; ++j) {
    double pj = 0.0;
    for (int i = 0; i < n; ++i) pj += p[static_cast<std::size_t>(i)] * kernel.at(j, i);
    residual = std::max(residual, std::abs(pj - p[static_cast<std::size_t>(j)]));
  }
  if (residual > 1e-12) {
    throw MultiplicityError("stationary_distribution: residual " + std::to_string(residual) +
                            " exceeds 1e-12; chain may be nearly reducible");
  }
  return Pmf(std::move(p));
}

}  // namespace nrd
