#include "nrd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nrd/errors.hpp"
#include "nrd/pair_chain.hpp"
#include "nrd/stationary.hpp"

namespace nrd {

namespace {

constexpr double kLn2 = 0.6931471805599453;

StochasticKernel uniform_marginal(int ny) {
  StochasticKernel m({ny}, ny);
  std::vector<double> row(static_cast<std::size_t>(ny), 1.0 / ny);
  for (int r = 0; r < ny; ++r) m.set_row(r, row);
  return m;
}

// P(x | y_prev) columns of the predecessor pair law; rows with vanishing
// y_prev mass are flagged with a -1 sentinel in the first slot.
std::vector<double> conditional_x_given_yprev(const std::vector<double>& w, int nx, int ny) {
  std::vector<double> cond(w.size());
  for (int y = 0; y < ny; ++y) {
    double mass = 0.0;
    for (int x = 0; x < nx; ++x) mass += w[static_cast<std::size_t>(x) * ny + y];
    if (mass <= 0.0) {
      cond[y] = -1.0;
      continue;
    }
    for (int x = 0; x < nx; ++x) {
      cond[static_cast<std::size_t>(x) * ny + y] = w[static_cast<std::size_t>(x) * ny + y] / mass;
    }
  }
  return cond;
}

struct IterationState {
  StochasticKernel kernel;
  Pmf pair_pi;
  std::vector<double> predecessor;  // w(x, y_prev)
  StochasticKernel next_marginal;
  double residual = 0.0;
};

IterationState iterate_once(const StochasticKernel& source, const DistortionSpec& rho, double s,
                            const StochasticKernel& marginal) {
  IterationState st{tilted_update(marginal, s, rho), {}, {}, marginal, 0.0};
  const int nx = source.output_size();
  const int ny = marginal.output_size();
  st.pair_pi = stationary_distribution(pair_transition(source, st.kernel));
  st.predecessor = predecessor_pair_law(source, st.pair_pi, ny);
  const std::vector<double> cond = conditional_x_given_yprev(st.predecessor, nx, ny);

  std::vector<double> row(static_cast<std::size_t>(ny));
  for (int yp = 0; yp < ny; ++yp) {
    if (cond[yp] == -1.0) {
      // Unreachable y_prev state: keep the previous row.
      auto old = marginal.row(yp);
      std::copy(old.begin(), old.end(), row.begin());
    } else {
      std::fill(row.begin(), row.end(), 0.0);
      for (int x = 0; x < nx; ++x) {
        const double px = cond[static_cast<std::size_t>(x) * ny + yp];
        for (int y = 0; y < ny; ++y) row[static_cast<std::size_t>(y)] += px * st.kernel(y, x, yp);
      }
    }
    for (int y = 0; y < ny; ++y) {
      st.residual = std::max(st.residual, std::abs(row[static_cast<std::size_t>(y)] -
                                                   marginal.at(y, yp)));
    }
    st.next_marginal.set_row(yp, row);
  }
  return st;
}

}  // namespace

StochasticKernel tilted_update(const StochasticKernel& marginal, double s,
                               const DistortionSpec& rho) {
  if (s > 0.0) throw std::domain_error("tilted_update: multiplier s must be <= 0");
  if (marginal.condition_arity() != 1 || marginal.condition_sizes()[0] != marginal.output_size()) {
    throw ShapeError("tilted_update: marginal must be a square P(y | y_prev) kernel");
  }
  const int ny = marginal.output_size();
  const int nx = rho.rows();
  if (rho.cols() != ny) throw ShapeError("tilted_update: distortion table shape mismatch");

  StochasticKernel kernel({nx, ny}, ny);
  std::vector<double> row(static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x) {
    for (int yp = 0; yp < ny; ++yp) {
      double z = 0.0;
      for (int y = 0; y < ny; ++y) {
        row[static_cast<std::size_t>(y)] = std::exp(s * rho(x, y)) * marginal.at(y, yp);
        z += row[static_cast<std::size_t>(y)];
      }
      if (z <= 0.0) {
        throw DegeneracyError("tilted_update: tilted row normalizer vanished for x=" +
                              std::to_string(x) + ", y_prev=" + std::to_string(yp));
      }
      for (double& v : row) v /= z;
      kernel.set_row(x * ny + yp, row);
    }
  }
  return kernel;
}

FixedPointResult fixed_point_solve(const StochasticKernel& source, const DistortionSpec& rho,
                                   double s, const SolverOptions& options) {
  return fixed_point_solve(source, rho, s, uniform_marginal(rho.cols()), options);
}

FixedPointResult fixed_point_solve(const StochasticKernel& source, const DistortionSpec& rho,
                                   double s, const StochasticKernel& initial_marginal,
                                   const SolverOptions& options) {
  StochasticKernel marginal = initial_marginal;
  const int ny = marginal.output_size();
  double residual = 0.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    IterationState st = iterate_once(source, rho, s, marginal);
    residual = st.residual;
    if (residual <= options.tol) {
      return FixedPointResult{{std::move(st.kernel), std::move(marginal)}, it, residual};
    }
    if (options.damping == 1.0) {
      marginal = std::move(st.next_marginal);
    } else {
      std::vector<double> row(static_cast<std::size_t>(ny));
      for (int yp = 0; yp < ny; ++yp) {
        for (int y = 0; y < ny; ++y) {
          row[static_cast<std::size_t>(y)] = options.damping * st.next_marginal.at(y, yp) +
                                             (1.0 - options.damping) * marginal.at(y, yp);
        }
        marginal.set_row(yp, row);
      }
    }
  }
  throw ConvergenceError("fixed_point_solve: no convergence after " +
                             std::to_string(options.max_iter) + " iterations (residual " +
                             std::to_string(residual) + ")",
                         residual);
}

double nrdf_value(const StochasticKernel& source, const DistortionSpec& rho, double s,
                  const ReproductionKernel& reproduction) {
  const int nx = source.output_size();
  const int ny = reproduction.marginal.output_size();
  const Pmf pi = stationary_distribution(pair_transition(source, reproduction.kernel));
  const std::vector<double> w = predecessor_pair_law(source, pi, ny);

  double distortion = 0.0;
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) distortion += pi[x * ny + y] * rho(x, y);
  }

  double e_log_z = 0.0;
  for (int x = 0; x < nx; ++x) {
    for (int yp = 0; yp < ny; ++yp) {
      const double weight = w[static_cast<std::size_t>(x) * ny + yp];
      if (weight == 0.0) continue;
      double z = 0.0;
      for (int y = 0; y < ny; ++y) z += std::exp(s * rho(x, y)) * reproduction.marginal.at(y, yp);
      e_log_z += weight * std::log(z);
    }
  }
  return (s * distortion - e_log_z) / kLn2;
}

double stationary_information_rate(const StochasticKernel& source,
                                   const ReproductionKernel& reproduction) {
  const int nx = source.output_size();
  const int ny = reproduction.marginal.output_size();
  const Pmf pi = stationary_distribution(pair_transition(source, reproduction.kernel));
  const std::vector<double> w = predecessor_pair_law(source, pi, ny);

  double rate = 0.0;
  for (int x = 0; x < nx; ++x) {
    for (int yp = 0; yp < ny; ++yp) {
      const double weight = w[static_cast<std::size_t>(x) * ny + yp];
      if (weight == 0.0) continue;
      for (int y = 0; y < ny; ++y) {
        const double k = reproduction.kernel(y, x, yp);
        if (k == 0.0) continue;
        rate += weight * k * std::log2(k / reproduction.marginal.at(y, yp));
      }
    }
  }
  return rate;
}

double reproduction_consistency_residual(const StochasticKernel& source,
                                         const ReproductionKernel& reproduction) {
  const int nx = source.output_size();
  const int ny = reproduction.marginal.output_size();
  const Pmf pi = stationary_distribution(pair_transition(source, reproduction.kernel));
  const std::vector<double> w = predecessor_pair_law(source, pi, ny);
  const std::vector<double> cond = conditional_x_given_yprev(w, nx, ny);

  double residual = 0.0;
  for (int yp = 0; yp < ny; ++yp) {
    if (cond[yp] == -1.0) continue;
    for (int y = 0; y < ny; ++y) {
      double induced = 0.0;
      for (int x = 0; x < nx; ++x) {
        induced += cond[static_cast<std::size_t>(x) * ny + yp] * reproduction.kernel(y, x, yp);
      }
      residual = std::max(residual, std::abs(induced - reproduction.marginal.at(y, yp)));
    }
  }
  return residual;
}

SolveResult distortion_bisection(const StochasticKernel& source, const DistortionSpec& rho,
                                 double target_D, const BisectionOptions& options) {
  const int nx = source.output_size();
  const int ny = rho.cols();

  auto solve_at = [&](double s, const StochasticKernel& init) {
    FixedPointResult fp = fixed_point_solve(source, rho, s, init, options.solver);
    const Pmf pi = stationary_distribution(pair_transition(source, fp.reproduction.kernel));
    double d = 0.0;
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) d += pi[x * ny + y] * rho(x, y);
    }
    return std::pair<FixedPointResult, double>{std::move(fp), d};
  };

  auto finish = [&](double s, FixedPointResult fp, double d) {
    SolveResult result;
    result.point.D = d;
    result.point.s = s;
    result.point.R = nrdf_value(source, rho, s, fp.reproduction);
    const Pmf pi = stationary_distribution(pair_transition(source, fp.reproduction.kernel));
    if (nx == ny) {
      const std::vector<double> w = predecessor_pair_law(source, pi, ny);
      double m = 0.0;
      for (int x = 0; x < nx; ++x) m += w[static_cast<std::size_t>(x) * ny + x];
      result.point.m = m;
    }
    if (nx == 2 && ny == 2) {
      result.point.alpha = fp.reproduction.kernel(0, 0, 0);
      result.point.beta = fp.reproduction.kernel(1, 1, 0);
    }
    result.reproduction = std::move(fp.reproduction);
    return result;
  };

  const StochasticKernel uniform = uniform_marginal(ny);
  auto [fp_hi, d_hi] = solve_at(0.0, uniform);
  if (target_D > d_hi + options.d_tol) {
    throw BracketError("distortion_bisection: target " + std::to_string(target_D) +
                       " exceeds the zero-rate distortion " + std::to_string(d_hi));
  }
  if (std::abs(d_hi - target_D) <= options.d_tol) return finish(0.0, std::move(fp_hi), d_hi);

  auto [fp_lo, d_lo] = solve_at(options.s_lo, uniform);
  if (target_D < d_lo - options.d_tol) {
    throw BracketError("distortion_bisection: target " + std::to_string(target_D) +
                       " is below the minimum achievable distortion " + std::to_string(d_lo));
  }
  if (std::abs(d_lo - target_D) <= options.d_tol) {
    return finish(options.s_lo, std::move(fp_lo), d_lo);
  }

  double lo = options.s_lo;
  double hi = 0.0;
  StochasticKernel warm = fp_lo.reproduction.marginal;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    auto [fp, d] = solve_at(mid, warm);
    warm = fp.reproduction.marginal;
    if (std::abs(d - target_D) <= options.d_tol) return finish(mid, std::move(fp), d);
    if (d < target_D) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw BracketError("distortion_bisection: bracket collapsed without reaching tolerance " +
                     std::to_string(options.d_tol));
}

}  // namespace nrd
