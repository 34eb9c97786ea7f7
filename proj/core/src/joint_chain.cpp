#include "nrd/joint_chain.hpp"

#include "nrd/pair_chain.hpp"
#include "nrd/stationary.hpp"

namespace nrd {

JointChain joint_chain(const TransmissionScheme& scheme) {
  const StochasticKernel induced = induced_reproduction(scheme);
  JointChain chain;
  chain.nx = scheme.source.output_size();
  chain.ny = induced.output_size();
  chain.transition = pair_transition(scheme.source, induced);
  chain.stationary = stationary_distribution(chain.transition);

  for (int x = 0; x < chain.nx; ++x) {
    for (int y = 0; y < chain.ny; ++y) {
      chain.expected_distortion += chain.stationary[chain.state(x, y)] * scheme.distortion(x, y);
    }
  }

  if (scheme.cost) {
    const std::vector<double> w =
        predecessor_pair_law(scheme.source, chain.stationary, chain.ny);
    double cost = 0.0;
    for (int x = 0; x < chain.nx; ++x) {
      for (int yp = 0; yp < chain.ny; ++yp) {
        cost += w[static_cast<std::size_t>(x) * chain.ny + yp] * (*scheme.cost)(x, yp);
      }
    }
    chain.expected_cost = cost;
  }
  return chain;
}

}  // namespace nrd
