#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nrd/initial.hpp"
#include "nrd/pair_table.hpp"
#include "nrd/scheme.hpp"

namespace nrd {

enum class Var : int { X = 0, A = 1, B = 2, Y = 3 };

/// Exact joint pmf over fixed-horizon trajectories of a variable subset.
///
/// Dense, time-major layout: the index runs over steps 0..n with step 0 most
/// significant; within a step, digits follow `vars` order (canonical
/// X, A, B, Y). So for vars = {X, Y}:
///   index = sum_i (x_i * ny + y_i) * R^(n-i),  R = nx * ny.
struct JointTable {
  int n = 0;
  std::vector<Var> vars;
  std::vector<int> sizes;     // alphabet size per retained var
  std::vector<double> pmf;

  int step_radix() const;
  std::size_t size() const { return pmf.size(); }
  double total_mass() const;
  bool has(Var v) const;
  int var_pos(Var v) const;   // digit position within a step, -1 if absent

  /// Digit of variable v at step i for a given trajectory index.
  int digit(std::size_t index, Var v, int step) const;

  /// Sums out all steps after `upto` (contiguous block sums).
  JointTable prefix(int upto) const;

  /// Sums out every variable not in `keep` (canonical order preserved).
  JointTable marginalize(const std::vector<Var>& keep) const;
};

struct EnumerationOptions {
  std::size_t budget = std::size_t{1} << 26;  // max final table entries
  int threads = 1;
  std::optional<InitialConditions> init;      // default: fixed_state(scheme)
};

/// Exact trajectory law of a scheme by forward dynamic programming over the
/// product factorization source x encoder x channel x decoder. Variables not
/// retained are summed out on the fly; summation order is fixed, so results
/// are bit-identical at any thread count. Throws BudgetError when the final
/// table would exceed options.budget entries.
JointTable enumerate_joint(const TransmissionScheme& scheme, int n,
                           const std::vector<Var>& vars = {Var::X, Var::A, Var::B, Var::Y},
                           const EnumerationOptions& options = {});

struct InfoReport {
  double directed_information_xy = 0.0;           // I(X^n -> Y^n), bits
  std::optional<double> directed_information_xb;  // I(X^n -> B^n), when B present
  double per_symbol = 0.0;                        // xy / (n + 1)
};

/// Directed information sum_i I(X^i; T_i | T^{i-1}) computed exactly from
/// the table, for T = Y (always) and T = B (when present).
InfoReport directed_information(const JointTable& table);

/// Same quantity through the relative-entropy route
/// E[ log ( prod_i P(t_i | x^i, t^{i-1}) / P(t^n) ) ]; used as an
/// independent cross-check of the conditional-information sum.
double directed_information_kl_route(const JointTable& table, Var target);

/// Distribution of S_n = sum_i rho(x_i, y_i): sorted (value, probability).
std::vector<std::pair<double, double>> distortion_distribution(const JointTable& table,
                                                               const DistortionSpec& rho);

/// Exact P{ S_n > (n+1) d }.
double excess_distortion_exact(const JointTable& table, double d, const DistortionSpec& rho);

/// Smallest d on the grid { k/(n+1) : k = 0..n+1 } with excess probability
/// <= epsilon. Requires epsilon > 0.
double min_excess_distortion(const JointTable& table, double epsilon, const DistortionSpec& rho);

/// E[S_n] / (n+1).
double exact_expected_distortion(const JointTable& table, const DistortionSpec& rho);

/// Max conditional-independence violations for the four Markov chains
/// implied by the joint factorization:
///   mc1: P(x_i | x^{i-1}, a^{i-1}, b^{i-1}, y^{i-1}) = P(x_i | x^{i-1})
///   mc2: P(a_i | x^i, a^{i-1}, b^{i-1}, y^{i-1})     = P(a_i | x^i, a^{i-1}, b^{i-1})
///   mc3: P(b_i | x^i, a^i, b^{i-1}, y^{i-1})         = P(b_i | x^i, a^i, b^{i-1})
///   mc4: P(y_i | x^i, a^i, b^i, y^{i-1})             = P(y_i | b^i, y^{i-1})
/// Conditioning events with probability below mass_floor are ignored.
struct MarkovCheckReport {
  double mc1 = 0.0;
  double mc2 = 0.0;
  double mc3 = 0.0;
  double mc4 = 0.0;
  double max_violation() const;
};
MarkovCheckReport check_markov_chains(const JointTable& table, double mass_floor = 1e-14);

/// Data processing check I(X^n -> Y^n) <= I(X^n -> B^n) + 1e-10.
struct DpiReport {
  double i_xy = 0.0;
  double i_xb = 0.0;
  bool ok = false;
  static constexpr double kSlack = 1e-10;
};
DpiReport check_dpi(const JointTable& table);

/// Debug listing: one line per trajectory with positive probability,
/// columns <var><step> ... ,probability.
void write_joint_table_csv(const JointTable& table, std::ostream& os);

}  // namespace nrd
