#include "nrd/pair_chain.hpp"

#include "nrd/errors.hpp"
#include "nrd/stationary.hpp"

namespace nrd {

StochasticKernel pair_transition(const StochasticKernel& source,
                                 const StochasticKernel& reproduction) {
  if (source.condition_arity() != 1 || source.condition_sizes()[0] != source.output_size()) {
    throw ShapeError("pair_transition: source must be a square one-step kernel");
  }
  if (reproduction.condition_arity() != 2 ||
      reproduction.condition_sizes()[0] != source.output_size() ||
      reproduction.condition_sizes()[1] != reproduction.output_size()) {
    throw ShapeError("pair_transition: reproduction must condition on (x, y_prev)");
  }
  const int nx = source.output_size();
  const int ny = reproduction.output_size();
  const int nz = nx * ny;
  StochasticKernel t({nz}, nz);
  std::vector<double> row(static_cast<std::size_t>(nz));
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      for (int xn = 0; xn < nx; ++xn) {
        const double px = source(xn, x);
        for (int yn = 0; yn < ny; ++yn) {
          row[static_cast<std::size_t>(xn) * ny + yn] = px * reproduction(yn, xn, y);
        }
      }
      t.set_row(x * ny + y, row);
    }
  }
  return t;
}

std::vector<double> predecessor_pair_law(const StochasticKernel& source, const Pmf& pair_pi,
                                         int ny) {
  const int nx = source.output_size();
  if (pair_pi.size() != nx * ny) throw ShapeError("predecessor_pair_law: size mismatch");
  std::vector<double> w(static_cast<std::size_t>(nx) * ny, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const double mass = pair_pi[x * ny + y];
      if (mass == 0.0) continue;
      for (int xn = 0; xn < nx; ++xn) {
        w[static_cast<std::size_t>(xn) * ny + y] += mass * source(xn, x);
      }
    }
  }
  return w;
}

double stationary_distortion(const StochasticKernel& source,
                             const StochasticKernel& reproduction, const DistortionSpec& rho) {
  const int nx = source.output_size();
  const int ny = reproduction.output_size();
  if (rho.rows() != nx || rho.cols() != ny) {
    throw ShapeError("stationary_distortion: distortion table shape mismatch");
  }
  const Pmf pi = stationary_distribution(pair_transition(source, reproduction));
  double d = 0.0;
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) d += pi[x * ny + y] * rho(x, y);
  }
  return d;
}

}  // namespace nrd
