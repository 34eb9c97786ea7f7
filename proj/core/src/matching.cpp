#include "nrd/matching.hpp"

#include <cmath>
#include <stdexcept>

#include "nrd/bsms.hpp"
#include "nrd/format.hpp"
#include "nrd/info.hpp"

namespace nrd {

CapacityPoint constrained_capacity(double alpha, double beta, double kappa) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0) ||
      !(kappa >= 0.0 && kappa <= 1.0)) {
    throw std::domain_error("constrained_capacity: alpha, beta, kappa must lie in [0, 1]");
  }
  const double mix = beta * (1.0 - kappa) + (1.0 - alpha) * kappa;
  double c = binary_entropy(mix) - kappa * binary_entropy(alpha) -
             (1.0 - kappa) * binary_entropy(beta);
  if (c < 0.0 && c > -1e-14) c = 0.0;
  return CapacityPoint{kappa, c, alpha, beta};
}

MatchingReport match_source_to_channel(double p, double D) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("match_source_to_channel: p must lie strictly inside (0, 1)");
  }
  if (!(D > 0.0 && D <= 0.5)) {
    throw std::domain_error("match_source_to_channel: D must lie in (0, 1/2]");
  }
  const RdPoint pt = bsms_nrdf(BsmsSource(p), D);
  const CapacityPoint cap = constrained_capacity(pt.alpha, pt.beta, pt.m);

  MatchingReport report;
  report.p = p;
  report.D = D;
  report.m = pt.m;
  report.R = pt.R;
  report.C = cap.C;
  report.gap = std::abs(pt.R - cap.C);
  report.matched = report.gap <= MatchingReport::kTolerance;
  return report;
}

std::vector<CapacityPoint> capacity_curve(double alpha, double beta,
                                          const std::vector<double>& kappa_grid) {
  std::vector<CapacityPoint> out;
  out.reserve(kappa_grid.size());
  for (double kappa : kappa_grid) out.push_back(constrained_capacity(alpha, beta, kappa));
  return out;
}

std::string to_json_string(const MatchingReport& r) {
  std::string s = "{";
  s += "\"p\": " + format_double(r.p);
  s += ", \"D\": " + format_double(r.D);
  s += ", \"m\": " + format_double(r.m);
  s += ", \"R_bits\": " + format_double(r.R);
  s += ", \"C_bits\": " + format_double(r.C);
  s += ", \"gap_bits\": " + format_double(r.gap);
  s += ", \"matched\": ";
  s += r.matched ? "true" : "false";
  s += "}";
  return s;
}

}  // namespace nrd
