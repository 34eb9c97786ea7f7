#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrd/bsms.hpp"
#include "nrd/kernel.hpp"
#include "nrd/pair_table.hpp"

namespace nrd {

/// A source/encoder/channel/decoder quadruple for symbol-by-symbol
/// transmission, with the distortion it is judged by and an optional
/// channel-use cost c(x_i, y_{i-1}).
struct TransmissionScheme {
  StochasticKernel source;    // P(x_i | x_{i-1})
  StochasticKernel encoder;   // P(a_i | x_i, b_{i-1})
  StochasticKernel channel;   // P(b_i | a_i, b_{i-1})
  StochasticKernel decoder;   // P(y_i | b_i, y_{i-1})
  DistortionSpec distortion;  // rho(x, y)
  std::optional<CostTable> cost;  // c(x, y_prev)
  bool uses_feedback = false;

  int source_size() const { return source.output_size(); }
  int decoder_size() const { return decoder.output_size(); }

  /// Checks kernel validity and alphabet consistency across stages.
  void validate() const;
};

/// Uncoded transmission of a BSMS(p): identity encoder and decoder around a
/// channel equal to the optimal reproduction kernel. No cost table.
TransmissionScheme build_unmatched_scheme(double p, double D);

/// Cost-constrained variant. Cost c(x, y_prev) charges 1 when x == y_prev
/// (the low-crossover sub-channel) and 0 otherwise, so the stationary
/// expected cost is the matched level kappa = m. Without feedback the
/// scheme is the unmatched one plus the cost table; with feedback the
/// encoder sends a = x XOR b_prev over the column-switched channel
/// Q(b | a, b_prev) = P*(b | a XOR b_prev, b_prev) with an identity decoder.
TransmissionScheme build_matched_scheme(double p, double D, bool feedback);

/// True when every decoder row is a point mass on the current channel
/// output symbol.
bool has_identity_decoder(const TransmissionScheme& scheme);

/// Composes encoder and channel (marginalizing a) into the end-to-end
/// reproduction kernel P(y | x, y_prev). Requires an identity decoder so
/// that y tracks b; otherwise the composition does not reduce to an
/// (x, y_prev) dependence and a StructureError is thrown.
StochasticKernel induced_reproduction(const TransmissionScheme& scheme);

struct RealizationDeviation {
  int x = 0;
  int y_prev = 0;
  int y = 0;
  double deviation = 0.0;
};

struct RealizationCheck {
  bool ok = false;
  double max_deviation = 0.0;
  std::vector<RealizationDeviation> deviations;  // rows above tolerance

  static constexpr double kTolerance = 1e-12;
};

/// Compares the scheme's induced P(y | x, y_prev) to the target kernel
/// row by row. ok iff every entry matches within 1e-12.
RealizationCheck verify_realization(const TransmissionScheme& scheme,
                                    const ReproductionKernel& target);

/// JSON document round-trip (kernels as nested row arrays, alphabets,
/// flags) for experiment manifests.
std::string to_json_string(const TransmissionScheme& scheme);
TransmissionScheme scheme_from_json_string(const std::string& text);

}  // namespace nrd
