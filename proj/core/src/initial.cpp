#include "nrd/initial.hpp"

#include <stdexcept>

#include "nrd/joint_chain.hpp"
#include "nrd/stationary.hpp"

namespace nrd {

InitialConditions InitialConditions::fixed_state(const TransmissionScheme& scheme, int y_prev) {
  const int nx = scheme.source.output_size();
  const int nb = scheme.channel.output_size();
  const int ny = scheme.decoder.output_size();
  if (y_prev < 0 || y_prev >= ny || y_prev >= nb) {
    throw std::invalid_argument("InitialConditions: y_prev out of range");
  }
  InitialConditions init{nx, nb, ny,
                         std::vector<double>(static_cast<std::size_t>(nx) * nb * ny, 0.0)};
  const Pmf pi = stationary_distribution(scheme.source);
  for (int x = 0; x < nx; ++x) {
    init.weights[(static_cast<std::size_t>(x) * nb + y_prev) * ny + y_prev] = pi[x];
  }
  return init;
}

InitialConditions InitialConditions::stationary_pair(const TransmissionScheme& scheme) {
  const JointChain chain = joint_chain(scheme);
  const int nx = chain.nx;
  const int ny = chain.ny;
  const int nb = scheme.channel.output_size();
  InitialConditions init{nx, nb, ny,
                         std::vector<double>(static_cast<std::size_t>(nx) * nb * ny, 0.0)};
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      init.weights[(static_cast<std::size_t>(x) * nb + y) * ny + y] =
          chain.stationary[chain.state(x, y)];
    }
  }
  return init;
}

InitialConditions InitialConditions::from_policy(const TransmissionScheme& scheme,
                                                 InitPolicy policy, int y_prev) {
  return policy == InitPolicy::fixed ? fixed_state(scheme, y_prev) : stationary_pair(scheme);
}

}  // namespace nrd
