#include "nrd/bsms.hpp"

#include <cmath>
#include <stdexcept>

#include "nrd/info.hpp"

namespace nrd {

BsmsSource::BsmsSource(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("BsmsSource: flip probability must lie strictly inside (0, 1)");
  }
}

StochasticKernel BsmsSource::transition() const {
  return StochasticKernel::from_rows({2}, 2, {{1.0 - p_, p_}, {p_, 1.0 - p_}});
}

RdPoint bsms_nrdf(const BsmsSource& source, double D) {
  if (!(D > 0.0 && D <= 1.0)) {
    throw std::domain_error("bsms_nrdf: distortion must lie in (0, 1]");
  }
  const double p = source.p();
  RdPoint pt;
  pt.D = D;
  pt.m = 1.0 - p - D + 2.0 * p * D;
  pt.alpha = (1.0 - p) * (1.0 - D) / pt.m;
  pt.beta = p * (1.0 - D) / (p + D - 2.0 * p * D);
  if (D <= 0.5) {
    pt.R = binary_entropy(pt.m) - binary_entropy(D);
    pt.s = std::log(D / (1.0 - D));
  } else {
    pt.R = 0.0;
    pt.s = 0.0;
  }
  return pt;
}

ReproductionKernel bsms_reproduction_kernel(const BsmsSource& source, double D) {
  if (!(D > 0.0 && D <= 0.5)) {
    throw std::domain_error("bsms_reproduction_kernel: distortion must lie in (0, 1/2]");
  }
  const RdPoint pt = bsms_nrdf(source, D);
  const double a = pt.alpha;
  const double b = pt.beta;
  // Rows indexed by (x, y_prev); entries (P(y=0), P(y=1)).
  StochasticKernel kernel = StochasticKernel::from_rows({2, 2}, 2,
                                                        {{a, 1.0 - a},
                                                         {b, 1.0 - b},
                                                         {1.0 - b, b},
                                                         {1.0 - a, a}});
  return ReproductionKernel{std::move(kernel), source.transition()};
}

}  // namespace nrd
