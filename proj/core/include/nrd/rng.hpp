#pragma once

#include <cstdint>
#include <span>

namespace nrd {

/// SplitMix64 step; used to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next();
};

/// xoshiro256++ with per-stream seeding: stream k of a master seed is an
/// independent generator derived only from (seed, k), so simulation results
/// do not depend on thread scheduling.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  static Xoshiro256pp for_stream(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t next();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();

  /// Samples an index from a pmf row by inverse CDF walk. The row is
  /// assumed normalized; trailing round-off falls to the last positive entry.
  int sample(std::span<const double> pmf);

 private:
  std::uint64_t s_[4];
};

}  // namespace nrd
