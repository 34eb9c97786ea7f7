#include "nrd/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "nrd/errors.hpp"

namespace nrd {

namespace {

const char* var_letter(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::A: return "a";
    case Var::B: return "b";
    case Var::Y: return "y";
  }
  return "?";
}

std::vector<Var> canonical_vars(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end(),
            [](Var a, Var b) { return static_cast<int>(a) < static_cast<int>(b); });
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty()) throw ShapeError("enumerate_joint: variable subset must be nonempty");
  return vars;
}

int alphabet_size(const TransmissionScheme& scheme, Var v) {
  switch (v) {
    case Var::X: return scheme.source.output_size();
    case Var::A: return scheme.encoder.output_size();
    case Var::B: return scheme.channel.output_size();
    case Var::Y: return scheme.decoder.output_size();
  }
  return 0;
}

std::size_t checked_pow(std::size_t base, int exp, std::size_t limit) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

int JointTable::step_radix() const {
  int r = 1;
  for (int s : sizes) r *= s;
  return r;
}

double JointTable::total_mass() const {
  double m = 0.0;
  for (double p : pmf) m += p;
  return m;
}

bool JointTable::has(Var v) const { return var_pos(v) >= 0; }

int JointTable::var_pos(Var v) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == v) return static_cast<int>(i);
  }
  return -1;
}

int JointTable::digit(std::size_t index, Var v, int step) const {
  const int pos = var_pos(v);
  if (pos < 0 || step < 0 || step > n) throw ShapeError("JointTable::digit: out of range");
  const int radix = step_radix();
  std::size_t block = 1;
  for (int i = 0; i < n - step; ++i) block *= static_cast<std::size_t>(radix);
  std::size_t step_index = (index / block) % static_cast<std::size_t>(radix);
  for (std::size_t j = vars.size(); j-- > static_cast<std::size_t>(pos) + 1;) {
    step_index /= static_cast<std::size_t>(sizes[j]);
  }
  return static_cast<int>(step_index % static_cast<std::size_t>(sizes[static_cast<std::size_t>(pos)]));
}

JointTable JointTable::prefix(int upto) const {
  if (upto < 0 || upto > n) throw ShapeError("JointTable::prefix: step out of range");
  if (upto == n) return *this;
  const int radix = step_radix();
  std::size_t block = 1;
  for (int i = 0; i < n - upto; ++i) block *= static_cast<std::size_t>(radix);
  JointTable out;
  out.n = upto;
  out.vars = vars;
  out.sizes = sizes;
  out.pmf.assign(pmf.size() / block, 0.0);
  for (std::size_t i = 0; i < out.pmf.size(); ++i) {
    double sum = 0.0;
    const std::size_t base = i * block;
    for (std::size_t k = 0; k < block; ++k) sum += pmf[base + k];
    out.pmf[i] = sum;
  }
  return out;
}

JointTable JointTable::marginalize(const std::vector<Var>& keep) const {
  const std::vector<Var> kept = canonical_vars(keep);
  JointTable out;
  out.n = n;
  out.vars = kept;
  for (Var v : kept) {
    const int pos = var_pos(v);
    if (pos < 0) throw ShapeError("JointTable::marginalize: variable not present");
    out.sizes.push_back(sizes[static_cast<std::size_t>(pos)]);
  }
  const int radix = step_radix();
  const int out_radix = out.step_radix();

  // Per-step-index map onto the kept digits.
  std::vector<std::size_t> kept_index(static_cast<std::size_t>(radix));
  for (int si = 0; si < radix; ++si) {
    int rem = si;
    std::vector<int> digits(vars.size());
    for (std::size_t j = vars.size(); j-- > 0;) {
      digits[j] = rem % sizes[j];
      rem /= sizes[j];
    }
    std::size_t ki = 0;
    for (Var v : kept) {
      const auto pos = static_cast<std::size_t>(var_pos(v));
      ki = ki * static_cast<std::size_t>(sizes[pos]) + static_cast<std::size_t>(digits[pos]);
    }
    kept_index[static_cast<std::size_t>(si)] = ki;
  }

  out.pmf.assign(checked_pow(static_cast<std::size_t>(out_radix), n + 1, SIZE_MAX / 2), 0.0);
  for (std::size_t idx = 0; idx < pmf.size(); ++idx) {
    const double p = pmf[idx];
    if (p == 0.0) continue;
    std::size_t rem = idx;
    std::size_t out_idx = 0;
    std::size_t mult = 1;
    // Walk steps from least significant (step n) upward.
    std::size_t out_step[32];
    int count = 0;
    while (count <= n) {
      out_step[count] = kept_index[rem % static_cast<std::size_t>(radix)];
      rem /= static_cast<std::size_t>(radix);
      ++count;
    }
    for (int i = 0; i < count; ++i) {
      out_idx += out_step[i] * mult;
      mult *= static_cast<std::size_t>(out_radix);
    }
    out.pmf[out_idx] += p;
  }
  return out;
}

JointTable enumerate_joint(const TransmissionScheme& scheme, int n,
                           const std::vector<Var>& vars_in, const EnumerationOptions& options) {
  scheme.validate();
  if (n < 0) throw std::invalid_argument("enumerate_joint: horizon must be >= 0");
  if (n > 30) throw BudgetError("enumerate_joint: horizon too large", SIZE_MAX, options.budget);

  JointTable table;
  table.n = n;
  table.vars = canonical_vars(vars_in);
  for (Var v : table.vars) table.sizes.push_back(alphabet_size(scheme, v));

  const int radix = table.step_radix();
  const std::size_t final_size =
      checked_pow(static_cast<std::size_t>(radix), n + 1, options.budget);
  if (final_size > options.budget) {
    throw BudgetError("enumerate_joint: table of " + std::to_string(radix) + "^" +
                          std::to_string(n + 1) + " entries exceeds the budget of " +
                          std::to_string(options.budget),
                      final_size, options.budget);
  }

  const int nx = scheme.source.output_size();
  const int na = scheme.encoder.output_size();
  const int nb = scheme.channel.output_size();
  const int ny = scheme.decoder.output_size();

  const bool keep_x = table.has(Var::X);
  const bool keep_a = table.has(Var::A);
  const bool keep_b = table.has(Var::B);
  const bool keep_y = table.has(Var::Y);

  // Hidden state carries the current (x, b, y) components not recoverable
  // from the retained step digits. a_i never conditions the future.
  int hidden_size = 1;
  if (!keep_x) hidden_size *= nx;
  if (!keep_b) hidden_size *= nb;
  if (!keep_y) hidden_size *= ny;

  auto hidden_encode = [&](int x, int b, int y) {
    int h = 0;
    if (!keep_x) h = h * nx + x;
    if (!keep_b) h = h * nb + b;
    if (!keep_y) h = h * ny + y;
    return h;
  };

  // Decoders from a step index to current (x, b, y); -1 when not retained.
  std::vector<int> step_x(static_cast<std::size_t>(radix), -1),
      step_b(static_cast<std::size_t>(radix), -1), step_y(static_cast<std::size_t>(radix), -1);
  for (int si = 0; si < radix; ++si) {
    int rem = si;
    for (std::size_t j = table.vars.size(); j-- > 0;) {
      const int d = rem % table.sizes[j];
      rem /= table.sizes[j];
      if (table.vars[j] == Var::X) step_x[static_cast<std::size_t>(si)] = d;
      if (table.vars[j] == Var::B) step_b[static_cast<std::size_t>(si)] = d;
      if (table.vars[j] == Var::Y) step_y[static_cast<std::size_t>(si)] = d;
    }
  }
  std::vector<int> hid_x(static_cast<std::size_t>(hidden_size)),
      hid_b(static_cast<std::size_t>(hidden_size)), hid_y(static_cast<std::size_t>(hidden_size));
  for (int h = 0; h < hidden_size; ++h) {
    int rem = h;
    int x = -1, b = -1, y = -1;
    if (!keep_y) { y = rem % ny; rem /= ny; }
    if (!keep_b) { b = rem % nb; rem /= nb; }
    if (!keep_x) { x = rem % nx; rem /= nx; }
    hid_x[static_cast<std::size_t>(h)] = x;
    hid_b[static_cast<std::size_t>(h)] = b;
    hid_y[static_cast<std::size_t>(h)] = y;
  }

  const InitialConditions init =
      options.init ? *options.init : InitialConditions::fixed_state(scheme);
  if (init.nx != nx || init.nb != nb || init.ny != ny) {
    throw ShapeError("enumerate_joint: initial conditions shaped for a different scheme");
  }

  // cur is indexed by (prefix, state): at the start one pseudo-prefix with
  // the full (x, b, y) triple as state; afterwards the compressed hidden part.
  std::size_t prefix_count = 1;
  int state_size = nx * nb * ny;
  std::vector<double> cur = init.weights;

  auto step_digit = [&](int x, int a, int b, int y) {
    std::size_t d = 0;
    if (keep_x) d = d * static_cast<std::size_t>(nx) + static_cast<std::size_t>(x);
    if (keep_a) d = d * static_cast<std::size_t>(na) + static_cast<std::size_t>(a);
    if (keep_b) d = d * static_cast<std::size_t>(nb) + static_cast<std::size_t>(b);
    if (keep_y) d = d * static_cast<std::size_t>(ny) + static_cast<std::size_t>(y);
    return d;
  };

  std::vector<double> next;
  for (int i = 0; i <= n; ++i) {
    next.assign(prefix_count * static_cast<std::size_t>(radix) *
                    static_cast<std::size_t>(hidden_size),
                0.0);

    auto process_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t prefix = lo; prefix < hi; ++prefix) {
        const int last_step =
            (i == 0) ? 0 : static_cast<int>(prefix % static_cast<std::size_t>(radix));
        for (int st = 0; st < state_size; ++st) {
          const double weight = cur[prefix * static_cast<std::size_t>(state_size) +
                                    static_cast<std::size_t>(st)];
          if (weight == 0.0) continue;
          int x, b, y;
          if (i == 0) {
            x = st / (nb * ny);
            b = (st / ny) % nb;
            y = st % ny;
          } else {
            x = keep_x ? step_x[static_cast<std::size_t>(last_step)]
                       : hid_x[static_cast<std::size_t>(st)];
            b = keep_b ? step_b[static_cast<std::size_t>(last_step)]
                       : hid_b[static_cast<std::size_t>(st)];
            y = keep_y ? step_y[static_cast<std::size_t>(last_step)]
                       : hid_y[static_cast<std::size_t>(st)];
          }
          for (int xn = 0; xn < nx; ++xn) {
            const double px = weight * scheme.source(xn, x);
            if (px == 0.0) continue;
            for (int an = 0; an < na; ++an) {
              const double pa = px * scheme.encoder(an, xn, b);
              if (pa == 0.0) continue;
              for (int bn = 0; bn < nb; ++bn) {
                const double pb = pa * scheme.channel(bn, an, b);
                if (pb == 0.0) continue;
                for (int yn = 0; yn < ny; ++yn) {
                  const double py = pb * scheme.decoder(yn, bn, y);
                  if (py == 0.0) continue;
                  const std::size_t target =
                      (prefix * static_cast<std::size_t>(radix) + step_digit(xn, an, bn, yn)) *
                          static_cast<std::size_t>(hidden_size) +
                      static_cast<std::size_t>(hidden_encode(xn, bn, yn));
                  next[target] += py;
                }
              }
            }
          }
        }
      }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || prefix_count < 1024) {
      process_range(0, prefix_count);
    } else {
      // Distinct prefixes write to disjoint blocks of `next`, so partitioning
      // by prefix is race-free and summation order stays fixed.
      std::vector<std::thread> pool;
      const std::size_t chunk = (prefix_count + static_cast<std::size_t>(threads) - 1) /
                                static_cast<std::size_t>(threads);
      for (int t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        const std::size_t hi = std::min(prefix_count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(process_range, lo, hi);
      }
      for (auto& th : pool) th.join();
    }

    cur = std::move(next);
    prefix_count *= static_cast<std::size_t>(radix);
    state_size = hidden_size;
  }

  table.pmf.assign(prefix_count, 0.0);
  for (std::size_t prefix = 0; prefix < prefix_count; ++prefix) {
    double sum = 0.0;
    for (int h = 0; h < hidden_size; ++h) {
      sum += cur[prefix * static_cast<std::size_t>(hidden_size) + static_cast<std::size_t>(h)];
    }
    table.pmf[prefix] = sum;
  }
  return table;
}

namespace {

// Directed information sum_i I(X^i; T_i | T^{i-1}) for T in {Y, B}.
double causal_information(const JointTable& table, Var target) {
  const JointTable m = table.marginalize({Var::X, target});
  const int nt = m.sizes[1];
  const int radix = m.step_radix();
  const int n = m.n;

  // Prefix tables P(x^i, t^i) and their T-marginals.
  std::vector<JointTable> px_t(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<double>> pt(static_cast<std::size_t>(n) + 1);
  px_t[static_cast<std::size_t>(n)] = m;
  for (int i = n - 1; i >= 0; --i) {
    px_t[static_cast<std::size_t>(i)] = px_t[static_cast<std::size_t>(i) + 1].prefix(i);
  }
  for (int i = 0; i <= n; ++i) {
    pt[static_cast<std::size_t>(i)] =
        px_t[static_cast<std::size_t>(i)].marginalize({target}).pmf;
  }

  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    const JointTable& joint = px_t[static_cast<std::size_t>(i)];
    // P(x^i, t^{i-1}): drop the last T digit (least significant).
    std::vector<double> joint_prev(joint.pmf.size() / static_cast<std::size_t>(nt), 0.0);
    for (std::size_t idx = 0; idx < joint.pmf.size(); ++idx) {
      joint_prev[idx / static_cast<std::size_t>(nt)] += joint.pmf[idx];
    }
    double info = 0.0;
    for (std::size_t idx = 0; idx < joint.pmf.size(); ++idx) {
      const double p = joint.pmf[idx];
      if (p == 0.0) continue;
      // T-path key for this prefix.
      std::size_t tkey = 0;
      std::size_t rem = idx;
      std::size_t mult = 1;
      for (int step = i; step >= 0; --step) {
        const std::size_t si = rem % static_cast<std::size_t>(radix);
        rem /= static_cast<std::size_t>(radix);
        tkey += (si % static_cast<std::size_t>(nt)) * mult;
        mult *= static_cast<std::size_t>(nt);
      }
      const double pt_full = pt[static_cast<std::size_t>(i)][tkey];
      const double pt_prev =
          (i == 0) ? 1.0 : pt[static_cast<std::size_t>(i) - 1][tkey / static_cast<std::size_t>(nt)];
      info += p * std::log2(p * pt_prev /
                            (joint_prev[idx / static_cast<std::size_t>(nt)] * pt_full));
    }
    total += info;
  }
  return total;
}

}  // namespace

InfoReport directed_information(const JointTable& table) {
  if (!table.has(Var::X) || !table.has(Var::Y)) {
    throw ShapeError("directed_information: table must include X and Y");
  }
  InfoReport report;
  report.directed_information_xy = causal_information(table, Var::Y);
  if (table.has(Var::B)) report.directed_information_xb = causal_information(table, Var::B);
  report.per_symbol = report.directed_information_xy / (table.n + 1);
  return report;
}

double directed_information_kl_route(const JointTable& table, Var target) {
  if (!table.has(Var::X) || !table.has(target)) {
    throw ShapeError("directed_information_kl_route: required variables missing");
  }
  const JointTable m = table.marginalize({Var::X, target});
  const int nt = m.sizes[1];
  const int radix = m.step_radix();
  const int n = m.n;

  std::vector<JointTable> px_t(static_cast<std::size_t>(n) + 1);
  px_t[static_cast<std::size_t>(n)] = m;
  for (int i = n - 1; i >= 0; --i) {
    px_t[static_cast<std::size_t>(i)] = px_t[static_cast<std::size_t>(i) + 1].prefix(i);
  }
  std::vector<std::vector<double>> joint_prev(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const auto& joint = px_t[static_cast<std::size_t>(i)].pmf;
    joint_prev[static_cast<std::size_t>(i)].assign(joint.size() / static_cast<std::size_t>(nt),
                                                   0.0);
    for (std::size_t idx = 0; idx < joint.size(); ++idx) {
      joint_prev[static_cast<std::size_t>(i)][idx / static_cast<std::size_t>(nt)] += joint[idx];
    }
  }
  const std::vector<double> pt_full = m.marginalize({target}).pmf;

  std::vector<std::size_t> pow_radix(static_cast<std::size_t>(n) + 1);
  pow_radix[0] = 1;
  for (int i = 1; i <= n; ++i) {
    pow_radix[static_cast<std::size_t>(i)] =
        pow_radix[static_cast<std::size_t>(i) - 1] * static_cast<std::size_t>(radix);
  }

  double kl = 0.0;
  for (std::size_t idx = 0; idx < m.pmf.size(); ++idx) {
    const double p = m.pmf[idx];
    if (p == 0.0) continue;
    double log_term = 0.0;
    for (int i = 0; i <= n; ++i) {
      const std::size_t pfx = idx / pow_radix[static_cast<std::size_t>(n - i)];
      log_term += std::log2(px_t[static_cast<std::size_t>(i)].pmf[pfx] /
                            joint_prev[static_cast<std::size_t>(i)]
                                      [pfx / static_cast<std::size_t>(nt)]);
    }
    std::size_t tkey = 0;
    std::size_t rem = idx;
    std::size_t mult = 1;
    for (int step = n; step >= 0; --step) {
      const std::size_t si = rem % static_cast<std::size_t>(radix);
      rem /= static_cast<std::size_t>(radix);
      tkey += (si % static_cast<std::size_t>(nt)) * mult;
      mult *= static_cast<std::size_t>(nt);
    }
    kl += p * (log_term - std::log2(pt_full[tkey]));
  }
  return kl;
}

std::vector<std::pair<double, double>> distortion_distribution(const JointTable& table,
                                                               const DistortionSpec& rho) {
  if (!table.has(Var::X) || !table.has(Var::Y)) {
    throw ShapeError("distortion_distribution: table must include X and Y");
  }
  const JointTable m = (table.vars == std::vector<Var>{Var::X, Var::Y})
                           ? table
                           : table.marginalize({Var::X, Var::Y});
  const int ny = m.sizes[1];
  const int radix = m.step_radix();
  if (rho.rows() != m.sizes[0] || rho.cols() != ny) {
    throw ShapeError("distortion_distribution: distortion table shape mismatch");
  }
  std::vector<double> contrib(static_cast<std::size_t>(radix));
  for (int si = 0; si < radix; ++si) {
    contrib[static_cast<std::size_t>(si)] = rho(si / ny, si % ny);
  }
  std::map<double, double> dist;
  for (std::size_t idx = 0; idx < m.pmf.size(); ++idx) {
    const double p = m.pmf[idx];
    if (p == 0.0) continue;
    double s = 0.0;
    std::size_t rem = idx;
    for (int i = 0; i <= m.n; ++i) {
      s += contrib[rem % static_cast<std::size_t>(radix)];
      rem /= static_cast<std::size_t>(radix);
    }
    dist[s] += p;
  }
  return {dist.begin(), dist.end()};
}

double excess_distortion_exact(const JointTable& table, double d, const DistortionSpec& rho) {
  const double threshold = (table.n + 1) * d;
  double p = 0.0;
  for (const auto& [value, prob] : distortion_distribution(table, rho)) {
    if (value > threshold) p += prob;
  }
  return p;
}

double min_excess_distortion(const JointTable& table, double epsilon, const DistortionSpec& rho) {
  if (!(epsilon > 0.0)) {
    throw std::domain_error("min_excess_distortion: epsilon must be positive");
  }
  const auto dist = distortion_distribution(table, rho);
  const int n = table.n;
  for (int k = 0; k <= n + 1; ++k) {
    double excess = 0.0;
    for (const auto& [value, prob] : dist) {
      if (value > static_cast<double>(k)) excess += prob;
    }
    if (excess <= epsilon) return static_cast<double>(k) / (n + 1);
  }
  throw std::domain_error("min_excess_distortion: no grid threshold meets epsilon");
}

double exact_expected_distortion(const JointTable& table, const DistortionSpec& rho) {
  double e = 0.0;
  for (const auto& [value, prob] : distortion_distribution(table, rho)) e += value * prob;
  return e / (table.n + 1);
}

double MarkovCheckReport::max_violation() const {
  return std::max(std::max(mc1, mc2), std::max(mc3, mc4));
}

namespace {

struct CondTerm {
  Var v;
  int upto;  // include v_0..v_upto; upto < 0 contributes nothing
};

double chain_violation(const JointTable& table, Var target, int step,
                       const std::vector<CondTerm>& full, const std::vector<CondTerm>& reduced,
                       double mass_floor) {
  const int nt = table.sizes[static_cast<std::size_t>(table.var_pos(target))];

  auto key_of = [&](std::size_t idx, const std::vector<CondTerm>& terms) {
    std::uint64_t key = 1;  // leading 1 keeps distinct lengths distinct
    for (const CondTerm& term : terms) {
      const auto size =
          static_cast<std::uint64_t>(table.sizes[static_cast<std::size_t>(table.var_pos(term.v))]);
      for (int i = 0; i <= term.upto; ++i) {
        key = key * size + static_cast<std::uint64_t>(table.digit(idx, term.v, i));
      }
    }
    return key;
  };

  struct FullEntry {
    std::vector<double> hist;
    std::uint64_t reduced_key = 0;
  };
  std::unordered_map<std::uint64_t, FullEntry> full_hist;
  std::unordered_map<std::uint64_t, std::vector<double>> reduced_hist;

  for (std::size_t idx = 0; idx < table.pmf.size(); ++idx) {
    const double p = table.pmf[idx];
    if (p == 0.0) continue;
    const std::uint64_t fk = key_of(idx, full);
    const std::uint64_t rk = key_of(idx, reduced);
    const int t = table.digit(idx, target, step);
    auto& fe = full_hist[fk];
    if (fe.hist.empty()) {
      fe.hist.assign(static_cast<std::size_t>(nt), 0.0);
      fe.reduced_key = rk;
    }
    fe.hist[static_cast<std::size_t>(t)] += p;
    auto& rh = reduced_hist[rk];
    if (rh.empty()) rh.assign(static_cast<std::size_t>(nt), 0.0);
    rh[static_cast<std::size_t>(t)] += p;
  }

  double violation = 0.0;
  for (const auto& [fk, fe] : full_hist) {
    double full_mass = 0.0;
    for (double v : fe.hist) full_mass += v;
    if (full_mass < mass_floor) continue;
    const auto& rh = reduced_hist.at(fe.reduced_key);
    double reduced_mass = 0.0;
    for (double v : rh) reduced_mass += v;
    for (int t = 0; t < nt; ++t) {
      violation = std::max(violation, std::abs(fe.hist[static_cast<std::size_t>(t)] / full_mass -
                                               rh[static_cast<std::size_t>(t)] / reduced_mass));
    }
  }
  return violation;
}

}  // namespace

MarkovCheckReport check_markov_chains(const JointTable& table, double mass_floor) {
  for (Var v : {Var::X, Var::A, Var::B, Var::Y}) {
    if (!table.has(v)) {
      throw ShapeError("check_markov_chains: table must include X, A, B and Y");
    }
  }
  MarkovCheckReport report;
  for (int i = 0; i <= table.n; ++i) {
    report.mc1 = std::max(
        report.mc1,
        chain_violation(table, Var::X, i,
                        {{Var::X, i - 1}, {Var::A, i - 1}, {Var::B, i - 1}, {Var::Y, i - 1}},
                        {{Var::X, i - 1}}, mass_floor));
    report.mc2 = std::max(
        report.mc2,
        chain_violation(table, Var::A, i,
                        {{Var::X, i}, {Var::A, i - 1}, {Var::B, i - 1}, {Var::Y, i - 1}},
                        {{Var::X, i}, {Var::A, i - 1}, {Var::B, i - 1}}, mass_floor));
    report.mc3 = std::max(
        report.mc3,
        chain_violation(table, Var::B, i,
                        {{Var::X, i}, {Var::A, i}, {Var::B, i - 1}, {Var::Y, i - 1}},
                        {{Var::X, i}, {Var::A, i}, {Var::B, i - 1}}, mass_floor));
    report.mc4 = std::max(
        report.mc4,
        chain_violation(table, Var::Y, i,
                        {{Var::X, i}, {Var::A, i}, {Var::B, i}, {Var::Y, i - 1}},
                        {{Var::B, i}, {Var::Y, i - 1}}, mass_floor));
  }
  return report;
}

DpiReport check_dpi(const JointTable& table) {
  if (!table.has(Var::X) || !table.has(Var::B) || !table.has(Var::Y)) {
    throw ShapeError("check_dpi: table must include X, B and Y");
  }
  DpiReport report;
  report.i_xy = causal_information(table, Var::Y);
  report.i_xb = causal_information(table, Var::B);
  report.ok = report.i_xy <= report.i_xb + DpiReport::kSlack;
  return report;
}

void write_joint_table_csv(const JointTable& table, std::ostream& os) {
  for (int i = 0; i <= table.n; ++i) {
    for (Var v : table.vars) {
      os << var_letter(v) << i << ",";
    }
  }
  os << "probability\n";
  for (std::size_t idx = 0; idx < table.pmf.size(); ++idx) {
    if (table.pmf[idx] == 0.0) continue;
    for (int i = 0; i <= table.n; ++i) {
      for (Var v : table.vars) {
        os << table.digit(idx, v, i) << ",";
      }
    }
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", table.pmf[idx]);
    os.write(buf, len);
    os << "\n";
  }
}

}  // namespace nrd
