#include "nrd/info.hpp"

#include <cmath>
#include <stdexcept>

#include "nrd/errors.hpp"

namespace nrd {

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("binary_entropy: q must lie in [0, 1]");
  }
  double h = 0.0;
  if (q > 0.0) h -= q * std::log2(q);
  if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
  return h;
}

double entropy(const Pmf& pmf) {
  pmf.validate();
  double h = 0.0;
  for (double p : pmf) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double kl_divergence(const Pmf& p, const Pmf& q) {
  p.validate();
  q.validate();
  if (p.size() != q.size()) throw ShapeError("kl_divergence: alphabet size mismatch");
  double d = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      throw std::domain_error("kl_divergence: p is not absolutely continuous w.r.t. q");
    }
    d += p[i] * std::log2(p[i] / q[i]);
  }
  return d;
}

}  // namespace nrd
