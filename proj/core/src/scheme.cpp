#include "nrd/scheme.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "nrd/errors.hpp"

namespace nrd {

namespace {

using nlohmann::json;

json kernel_to_json(const StochasticKernel& k) {
  json rows = json::array();
  for (int r = 0; r < k.row_count(); ++r) {
    auto row = k.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return json{{"condition_sizes", k.condition_sizes()},
              {"output_size", k.output_size()},
              {"rows", std::move(rows)}};
}

StochasticKernel kernel_from_json(const json& j) {
  return StochasticKernel::from_rows(j.at("condition_sizes").get<std::vector<int>>(),
                                     j.at("output_size").get<int>(),
                                     j.at("rows").get<std::vector<std::vector<double>>>());
}

json pair_table_to_json(const PairTable& t) {
  json rows = json::array();
  for (int i = 0; i < t.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(t.cols()));
    for (int j = 0; j < t.cols(); ++j) row[static_cast<std::size_t>(j)] = t(i, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

PairTable pair_table_from_json(const json& j) {
  auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw ShapeError("scheme_from_json_string: empty pair table");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw ShapeError("scheme_from_json_string: ragged pair table");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PairTable(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                   std::move(flat));
}

void require_valid(const StochasticKernel& k, const char* name) {
  auto violations = validate_kernel(k);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string("TransmissionScheme: ") + name + " row " +
                                std::to_string(violations.front().row) + ": " +
                                violations.front().message);
  }
}

}  // namespace

void TransmissionScheme::validate() const {
  require_valid(source, "source");
  require_valid(encoder, "encoder");
  require_valid(channel, "channel");
  require_valid(decoder, "decoder");
  const int nx = source.output_size();
  const int na = encoder.output_size();
  const int nb = channel.output_size();
  const int ny = decoder.output_size();
  if (source.condition_arity() != 1 || source.condition_sizes()[0] != nx) {
    throw ShapeError("TransmissionScheme: source must be a square one-step kernel");
  }
  if (encoder.condition_sizes() != std::vector<int>{nx, nb}) {
    throw ShapeError("TransmissionScheme: encoder must condition on (x, b_prev)");
  }
  if (channel.condition_sizes() != std::vector<int>{na, nb}) {
    throw ShapeError("TransmissionScheme: channel must condition on (a, b_prev)");
  }
  if (decoder.condition_sizes() != std::vector<int>{nb, ny}) {
    throw ShapeError("TransmissionScheme: decoder must condition on (b, y_prev)");
  }
  if (distortion.rows() != nx || distortion.cols() != ny) {
    throw ShapeError("TransmissionScheme: distortion table must be (x, y) shaped");
  }
  if (cost && (cost->rows() != nx || cost->cols() != ny)) {
    throw ShapeError("TransmissionScheme: cost table must be (x, y_prev) shaped");
  }
}

TransmissionScheme build_unmatched_scheme(double p, double D) {
  const ReproductionKernel repro = bsms_reproduction_kernel(BsmsSource(p), D);
  TransmissionScheme scheme;
  scheme.source = BsmsSource(p).transition();
  scheme.encoder = StochasticKernel::deterministic({2, 2}, 2,
                                                   [](std::span<const int> c) { return c[0]; });
  scheme.channel = repro.kernel;  // P(b | a, b_prev) = P*(y | x, y_prev)
  scheme.decoder = StochasticKernel::deterministic({2, 2}, 2,
                                                   [](std::span<const int> c) { return c[0]; });
  scheme.distortion = PairTable::hamming(2);
  scheme.uses_feedback = false;
  return scheme;
}

TransmissionScheme build_matched_scheme(double p, double D, bool feedback) {
  TransmissionScheme scheme = build_unmatched_scheme(p, D);
  // Cost 1 on the low-crossover sub-channel (x == y_prev), 0 otherwise.
  scheme.cost = PairTable(2, 2, {1.0, 0.0, 0.0, 1.0});
  if (!feedback) return scheme;

  const StochasticKernel& target = scheme.channel;
  StochasticKernel switched({2, 2}, 2);
  for (int a = 0; a < 2; ++a) {
    for (int bp = 0; bp < 2; ++bp) {
      switched.set_row(a * 2 + bp, target.row((a ^ bp) * 2 + bp));
    }
  }
  scheme.channel = std::move(switched);
  scheme.encoder = StochasticKernel::deterministic(
      {2, 2}, 2, [](std::span<const int> c) { return c[0] ^ c[1]; });
  scheme.uses_feedback = true;
  return scheme;
}

bool has_identity_decoder(const TransmissionScheme& scheme) {
  const StochasticKernel& d = scheme.decoder;
  if (d.output_size() != d.condition_sizes()[0]) return false;
  for (int b = 0; b < d.condition_sizes()[0]; ++b) {
    for (int yp = 0; yp < d.condition_sizes()[1]; ++yp) {
      for (int y = 0; y < d.output_size(); ++y) {
        if (d(y, b, yp) != (y == b ? 1.0 : 0.0)) return false;
      }
    }
  }
  return true;
}

StochasticKernel induced_reproduction(const TransmissionScheme& scheme) {
  scheme.validate();
  if (!has_identity_decoder(scheme)) {
    throw StructureError(
        "induced_reproduction: decoder is not the identity, so y_i does not reduce to an "
        "(x_i, y_prev) dependence");
  }
  const int nx = scheme.source.output_size();
  const int na = scheme.encoder.output_size();
  const int ny = scheme.decoder.output_size();  // == nb
  StochasticKernel induced({nx, ny}, ny);
  std::vector<double> row(static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x) {
    for (int yp = 0; yp < ny; ++yp) {
      std::fill(row.begin(), row.end(), 0.0);
      for (int a = 0; a < na; ++a) {
        const double pa = scheme.encoder(a, x, yp);
        if (pa == 0.0) continue;
        for (int b = 0; b < ny; ++b) {
          row[static_cast<std::size_t>(b)] += pa * scheme.channel(b, a, yp);
        }
      }
      induced.set_row(x * ny + yp, row);
    }
  }
  return induced;
}

RealizationCheck verify_realization(const TransmissionScheme& scheme,
                                    const ReproductionKernel& target) {
  const StochasticKernel induced = induced_reproduction(scheme);
  if (induced.condition_sizes() != target.kernel.condition_sizes() ||
      induced.output_size() != target.kernel.output_size()) {
    throw ShapeError("verify_realization: target kernel shape mismatch");
  }
  RealizationCheck check;
  const int ny = induced.output_size();
  for (int x = 0; x < induced.condition_sizes()[0]; ++x) {
    for (int yp = 0; yp < induced.condition_sizes()[1]; ++yp) {
      for (int y = 0; y < ny; ++y) {
        const double dev = std::abs(induced(y, x, yp) - target.kernel(y, x, yp));
        check.max_deviation = std::max(check.max_deviation, dev);
        if (dev > RealizationCheck::kTolerance) {
          check.deviations.push_back({x, yp, y, dev});
        }
      }
    }
  }
  check.ok = check.max_deviation <= RealizationCheck::kTolerance;
  return check;
}

std::string to_json_string(const TransmissionScheme& scheme) {
  json j{{"source", kernel_to_json(scheme.source)},
         {"encoder", kernel_to_json(scheme.encoder)},
         {"channel", kernel_to_json(scheme.channel)},
         {"decoder", kernel_to_json(scheme.decoder)},
         {"distortion", pair_table_to_json(scheme.distortion)},
         {"cost", scheme.cost ? pair_table_to_json(*scheme.cost) : json(nullptr)},
         {"uses_feedback", scheme.uses_feedback}};
  return j.dump(2);
}

TransmissionScheme scheme_from_json_string(const std::string& text) {
  const json j = json::parse(text);
  TransmissionScheme scheme;
  scheme.source = kernel_from_json(j.at("source"));
  scheme.encoder = kernel_from_json(j.at("encoder"));
  scheme.channel = kernel_from_json(j.at("channel"));
  scheme.decoder = kernel_from_json(j.at("decoder"));
  scheme.distortion = pair_table_from_json(j.at("distortion"));
  if (!j.at("cost").is_null()) scheme.cost = pair_table_from_json(j.at("cost"));
  scheme.uses_feedback = j.at("uses_feedback").get<bool>();
  scheme.validate();
  return scheme;
}

}  // namespace nrd
