#include "nrd/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nrd/errors.hpp"

namespace nrd {

namespace {

// I(X; Y) in bits for a binary input (q, 1-q) and test channel with
// u = P(y=1 | x=0), v = P(y=0 | x=1).
double mutual_information(double q, double u, double v) {
  const double p00 = q * (1.0 - u);
  const double p01 = q * u;
  const double p10 = (1.0 - q) * v;
  const double p11 = (1.0 - q) * (1.0 - v);
  const double py0 = p00 + p10;
  const double py1 = p01 + p11;
  double info = 0.0;
  auto add = [&](double joint, double px, double py) {
    if (joint > 0.0) info += joint * std::log2(joint / (px * py));
  };
  add(p00, q, py0);
  add(p01, q, py1);
  add(p10, 1.0 - q, py0);
  add(p11, 1.0 - q, py1);
  return info;
}

}  // namespace

double brute_force_rdf_n0(const Pmf& marginal, double D, int grid_points) {
  marginal.validate();
  if (marginal.size() != 2) throw ShapeError("brute_force_rdf_n0: marginal must be binary");
  if (!(D > 0.0)) throw std::domain_error("brute_force_rdf_n0: D must be positive");
  if (grid_points < 3) throw std::invalid_argument("brute_force_rdf_n0: grid too coarse");
  const double q = marginal[0];

  // Expected Hamming distortion of (u, v) is q*u + (1-q)*v.
  double best = std::numeric_limits<double>::infinity();
  double best_u = 0.0;
  double best_v = 0.0;
  auto scan = [&](double u_lo, double u_hi, double v_lo, double v_hi, int points) {
    const double du = (u_hi - u_lo) / (points - 1);
    const double dv = (v_hi - v_lo) / (points - 1);
    for (int i = 0; i < points; ++i) {
      const double u = u_lo + i * du;
      if (u < 0.0 || u > 1.0) continue;
      for (int j = 0; j < points; ++j) {
        const double v = v_lo + j * dv;
        if (v < 0.0 || v > 1.0) continue;
        if (q * u + (1.0 - q) * v > D) continue;
        const double info = mutual_information(q, u, v);
        if (info < best) {
          best = info;
          best_u = u;
          best_v = v;
        }
      }
    }
  };

  scan(0.0, 1.0, 0.0, 1.0, grid_points);
  if (!std::isfinite(best)) {
    throw std::domain_error("brute_force_rdf_n0: no feasible test channel on the grid");
  }

  double span = 1.0 / (grid_points - 1);
  for (int round = 0; round < 5; ++round) {
    scan(best_u - span, best_u + span, best_v - span, best_v + span, 81);
    span /= 20.0;
  }
  return std::max(best, 0.0);
}

}  // namespace nrd
