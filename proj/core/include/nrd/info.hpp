#pragma once

#include "nrd/pmf.hpp"

namespace nrd {

/// Binary entropy H(q) in bits, with 0*log2(0) = 0.
/// Throws std::domain_error for q outside [0, 1].
double binary_entropy(double q);

/// Shannon entropy of a validated pmf, in bits.
double entropy(const Pmf& pmf);

/// Kullback-Leibler divergence D(p || q) in bits.
/// Requires matching alphabets and q(i) = 0 => p(i) = 0.
double kl_divergence(const Pmf& p, const Pmf& q);

}  // namespace nrd
