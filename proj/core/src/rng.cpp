#include "nrd/rng.hpp"

namespace nrd {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  SplitMix64 sm{seed};
  for (auto& s : s_) s = sm.next();
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

Xoshiro256pp Xoshiro256pp::for_stream(std::uint64_t master_seed, std::uint64_t stream) {
  SplitMix64 sm{master_seed ^ (kGolden * (stream + 1))};
  return Xoshiro256pp(sm.next());
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int Xoshiro256pp::sample(std::span<const double> pmf) {
  double u = next_unit();
  int last_positive = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf[i] > 0.0) last_positive = static_cast<int>(i);
    u -= pmf[i];
    if (u < 0.0) return static_cast<int>(i);
  }
  return last_positive;
}

}  // namespace nrd
