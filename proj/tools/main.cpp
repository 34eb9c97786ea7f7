// nrd: nonanticipative rate-distortion, source-channel matching and
// symbol-by-symbol transmission experiments over finite alphabets.
//
// Subcommands: rdf, capacity, match, simulate, bound, exact, rerun.
// Every command writes its outputs plus a manifest JSON that suffices to
// re-run it bit-identically (see rerun).

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "manifest.hpp"
#include "nrd/bound.hpp"
#include "nrd/bsms.hpp"
#include "nrd/enumeration.hpp"
#include "nrd/errors.hpp"
#include "nrd/format.hpp"
#include "nrd/joint_chain.hpp"
#include "nrd/matching.hpp"
#include "nrd/scheme.hpp"
#include "nrd/simulate.hpp"
#include "nrd/solver.hpp"
#include "nrd/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nrd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("NRD_OUT_DIR"); env && *env) return env;
  return ".";
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

TransmissionScheme scheme_by_kind(const std::string& kind, double p, double D) {
  if (kind == "unmatched") return build_unmatched_scheme(p, D);
  if (kind == "matched") return build_matched_scheme(p, D, false);
  if (kind == "matched-feedback") return build_matched_scheme(p, D, true);
  throw std::domain_error("unknown scheme kind '" + kind +
                          "' (expected unmatched, matched or matched-feedback)");
}

InitPolicy init_by_name(const std::string& name) {
  if (name == "fixed") return InitPolicy::fixed;
  if (name == "stationary") return InitPolicy::stationary;
  throw std::domain_error("unknown init policy '" + name + "' (expected fixed or stationary)");
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw std::domain_error("grid needs at least one step");
  if (steps == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  }
  return out;
}

std::vector<long long> horizon_grid(long long lo, long long hi, int steps,
                                    const std::string& spacing) {
  if (lo < 0 || hi < lo) throw std::domain_error("invalid horizon grid bounds");
  std::vector<long long> out;
  if (spacing == "log") {
    if (lo < 1) throw std::domain_error("log-spaced horizon grid needs n-min >= 1");
    for (double t : linspace(std::log(static_cast<double>(lo)),
                             std::log(static_cast<double>(hi)), steps)) {
      out.push_back(static_cast<long long>(std::llround(std::exp(t))));
    }
  } else if (spacing == "linear") {
    for (double t : linspace(static_cast<double>(lo), static_cast<double>(hi), steps)) {
      out.push_back(static_cast<long long>(std::llround(t)));
    }
  } else {
    throw std::domain_error("unknown spacing '" + spacing + "' (expected log or linear)");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Config-file support: a flag not given on the command line takes its value
// from the JSON config when present.
template <class T>
void config_override(const CLI::App& cmd, const std::string& flag, const json& cfg,
                     const std::string& key, T& var) {
  if (cmd.count(flag) == 0 && cfg.contains(key)) var = cfg.at(key).get<T>();
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  json cfg;
  in >> cfg;
  return cfg;
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

// ---------------------------------------------------------------------------
// Command executors. Each takes fully resolved parameters (as stored in the
// manifest) and returns the list of files it wrote.
// ---------------------------------------------------------------------------

std::vector<std::string> run_rdf(const json& prm, const fs::path& out_dir) {
  const double p = prm.at("p").get<double>();
  const bool with_solver = prm.at("solver").get<bool>();
  const std::vector<double> grid = linspace(prm.at("d_min").get<double>(),
                                            prm.at("d_max").get<double>(),
                                            prm.at("d_steps").get<int>());
  std::string csv = "p,D,R_bits,s,m,alpha,beta";
  if (with_solver) csv += ",R_solver,gap";
  csv += "\n";
  const BsmsSource source(p);
  for (double D : grid) {
    const RdPoint pt = bsms_nrdf(source, D);
    csv += format_double(p) + "," + format_double(D) + "," + format_double(pt.R) + "," +
           format_double(pt.s) + "," + format_double(pt.m) + "," + format_double(pt.alpha) +
           "," + format_double(pt.beta);
    if (with_solver) {
      double r_solver = 0.0;
      if (D < 0.5) {
        r_solver =
            distortion_bisection(source.transition(), PairTable::hamming(2), D).point.R;
      }
      csv += "," + format_double(r_solver) + "," + format_double(std::abs(pt.R - r_solver));
    }
    csv += "\n";
  }
  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, csv);
  return {out};
}

std::vector<std::string> run_capacity(const json& prm, const fs::path& out_dir) {
  const double alpha = prm.at("alpha").get<double>();
  const double beta = prm.at("beta").get<double>();
  const std::vector<double> grid = linspace(prm.at("kappa_min").get<double>(),
                                            prm.at("kappa_max").get<double>(),
                                            prm.at("kappa_steps").get<int>());
  std::string csv = "alpha,beta,kappa,C_bits\n";
  for (const CapacityPoint& pt : capacity_curve(alpha, beta, grid)) {
    csv += format_double(alpha) + "," + format_double(beta) + "," + format_double(pt.kappa) +
           "," + format_double(pt.C) + "\n";
  }
  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, csv);
  return {out};
}

std::vector<std::string> run_match(const json& prm, const fs::path& out_dir,
                                   bool* matched_out) {
  const MatchingReport report =
      match_source_to_channel(prm.at("p").get<double>(), prm.at("D").get<double>());
  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, to_json_string(report) + "\n");
  if (matched_out) *matched_out = report.matched;
  return {out};
}

std::vector<std::string> run_simulate(const json& prm, const fs::path& out_dir, int threads) {
  const double p = prm.at("p").get<double>();
  const double D = prm.at("D").get<double>();
  const int n = prm.at("n").get<int>();
  const TransmissionScheme scheme = scheme_by_kind(prm.at("scheme").get<std::string>(), p, D);
  const InitPolicy init = init_by_name(prm.at("init").get<std::string>());

  SimConfig config;
  config.n = n;
  config.trials = prm.at("trials").get<long long>();
  config.seed = prm.at("seed").get<std::uint64_t>();
  config.init = init;
  config.threads = threads;

  // Resolve the threshold: either given directly or as delta plus the exact
  // stationary per-symbol distortion.
  const double stationary_d = joint_chain(scheme).expected_distortion;
  double d = 0.0;
  std::optional<double> delta;
  if (prm.at("mode").get<std::string>() == "delta") {
    delta = prm.at("delta").get<double>();
    config.delta = delta;
    d = *delta + stationary_d;
  } else {
    d = prm.at("d").get<double>();
    if (d - stationary_d > 0.0) delta = d - stationary_d;
  }

  const std::vector<TrialRecord> records = simulate_trials(scheme, config);
  ExcessDistortionReport report = excess_probability(records, n, d);

  // Exact enumeration alongside, when the table fits the default budget.
  const EnumerationOptions enum_options{};
  const std::size_t nz = static_cast<std::size_t>(scheme.source_size()) *
                         static_cast<std::size_t>(scheme.decoder_size());
  std::size_t table_size = 1;
  for (int i = 0; i <= n && table_size <= enum_options.budget; ++i) table_size *= nz;
  if (table_size <= enum_options.budget) {
    EnumerationOptions opts;
    opts.init = InitialConditions::from_policy(scheme, init);
    const JointTable table = enumerate_joint(scheme, n, {Var::X, Var::Y}, opts);
    report.exact = excess_distortion_exact(table, d, scheme.distortion);
  }

  if (delta && *delta > 0.0) {
    const RdPoint pt = bsms_nrdf(BsmsSource(p), D);
    BoundParams params{bsms_minorization_lambda(p, pt.alpha, pt.beta), 1.0, 1.0, *delta, n};
    report.bound = hoeffding_bound(params);
  }

  std::string csv = "n,trials,d,delta,estimate,ci_low,ci_high,exact,bound,avg_cost\n";
  csv += std::to_string(n) + "," + std::to_string(config.trials) + "," + format_double(d) +
         "," + opt_field(delta) + "," + format_double(report.estimate) + "," +
         format_double(report.ci_low) + "," + format_double(report.ci_high) + "," +
         opt_field(report.exact) + "," + opt_field(report.bound) + "," +
         opt_field(report.avg_cost) + "\n";
  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, csv);
  return {out};
}

std::vector<std::string> run_bound(const json& prm, const fs::path& out_dir) {
  const double delta = prm.at("delta").get<double>();
  if (!(delta > 0.0)) throw std::domain_error("bound: delta must be positive");
  const std::vector<long long> grid =
      horizon_grid(prm.at("n_min").get<long long>(), prm.at("n_max").get<long long>(),
                   prm.at("n_steps").get<int>(), prm.at("spacing").get<std::string>());
  const std::vector<BoundPoint> curve =
      bound_curve(prm.at("p").get<double>(), prm.at("D").get<double>(), delta, grid);
  std::string csv = "n,delta,lambda,bound,valid\n";
  for (const BoundPoint& pt : curve) {
    csv += std::to_string(pt.n) + "," + format_double(delta) + "," + format_double(pt.lambda) +
           "," + opt_field(pt.bound) + "," + (pt.bound ? "1" : "0") + "\n";
  }
  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, csv);
  return {out};
}

std::vector<std::string> run_exact(const json& prm, const fs::path& out_dir, int threads) {
  const double p = prm.at("p").get<double>();
  const double D = prm.at("D").get<double>();
  const int n = prm.at("n").get<int>();
  const TransmissionScheme scheme = scheme_by_kind(prm.at("scheme").get<std::string>(), p, D);
  const InitPolicy init = init_by_name(prm.at("init").get<std::string>());

  EnumerationOptions opts;
  opts.threads = threads;
  opts.init = InitialConditions::from_policy(scheme, init);

  const JointTable txy = enumerate_joint(scheme, n, {Var::X, Var::Y}, opts);
  const InfoReport info = directed_information(txy);
  const double i_xb = directed_information_kl_route(
      enumerate_joint(scheme, n, {Var::X, Var::B}, opts), Var::B);

  json report;
  report["scheme"] = prm.at("scheme");
  report["p"] = p;
  report["D"] = D;
  report["n"] = n;
  report["init"] = prm.at("init");
  report["directed_information"] = {{"xy_bits", info.directed_information_xy},
                                    {"xb_bits", i_xb},
                                    {"per_symbol_bits", info.per_symbol}};
  json excess = json::array();
  for (int k = 0; k <= n + 1; ++k) {
    const double d = static_cast<double>(k) / (n + 1);
    excess.push_back(
        {{"d", d}, {"probability", excess_distortion_exact(txy, d, scheme.distortion)}});
  }
  report["excess_distortion"] = std::move(excess);
  report["expected_distortion_per_symbol"] = exact_expected_distortion(txy, scheme.distortion);

  if (n <= 3) {
    const MarkovCheckReport mc = check_markov_chains(
        enumerate_joint(scheme, n, {Var::X, Var::A, Var::B, Var::Y}, opts));
    report["markov_checks"] = {{"mc1", mc.mc1}, {"mc2", mc.mc2}, {"mc3", mc.mc3},
                               {"mc4", mc.mc4}};
  } else {
    report["markov_checks"] = nullptr;
  }
  report["dpi"] = {{"i_xy_bits", info.directed_information_xy},
                   {"i_xb_bits", i_xb},
                   {"ok", info.directed_information_xy <= i_xb + DpiReport::kSlack}};

  const std::string out = prm.at("out").get<std::string>();
  write_file(out_dir, out, report.dump(2) + "\n");
  return {out};
}

int dispatch(const std::string& command, const json& prm, const fs::path& out_dir,
             int threads) {
  std::vector<std::string> outputs;
  std::uint64_t seed = 0;
  int code = kExitOk;
  if (command == "rdf") {
    outputs = run_rdf(prm, out_dir);
  } else if (command == "capacity") {
    outputs = run_capacity(prm, out_dir);
  } else if (command == "match") {
    bool matched = false;
    outputs = run_match(prm, out_dir, &matched);
    code = matched ? kExitOk : kExitValidation;
  } else if (command == "simulate") {
    seed = prm.at("seed").get<std::uint64_t>();
    outputs = run_simulate(prm, out_dir, threads);
  } else if (command == "bound") {
    outputs = run_bound(prm, out_dir);
  } else if (command == "exact") {
    outputs = run_exact(prm, out_dir, threads);
  } else {
    throw std::domain_error("unknown command '" + command + "'");
  }
  cli::write_manifest(out_dir, outputs.front(), command, seed, prm, outputs);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonanticipative rate-distortion and source-channel matching toolkit"};
  app.set_version_flag("--version", std::string("nrd ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // accept --out-dir / --threads after the subcommand too

  std::string out_dir_flag;
  app.add_option("--out-dir", out_dir_flag,
                 "output directory (default: $NRD_OUT_DIR or current directory)");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for simulation and enumeration");

  // ---- rdf
  auto* rdf = app.add_subcommand("rdf", "closed-form R(D) curve for a BSMS(p)");
  std::string rdf_config;
  double rdf_p = 0.25, rdf_d = 0.0, rdf_dmin = 0.05, rdf_dmax = 0.45;
  int rdf_steps = 11;
  bool rdf_solver = false;
  std::string rdf_out = "rdf.csv";
  rdf->add_option("--config", rdf_config, "JSON config file (flags override it)");
  rdf->add_option("--p", rdf_p, "source flip probability");
  rdf->add_option("--d", rdf_d, "single distortion point");
  rdf->add_option("--d-min", rdf_dmin, "grid start");
  rdf->add_option("--d-max", rdf_dmax, "grid end");
  rdf->add_option("--d-steps", rdf_steps, "grid size");
  rdf->add_flag("--solver", rdf_solver, "append fixed-point solver rate and gap columns");
  rdf->add_option("--out", rdf_out, "output CSV name");

  // ---- capacity
  auto* capacity = app.add_subcommand("capacity", "constrained capacity curve C(kappa)");
  std::string cap_config;
  double cap_alpha = 0.9, cap_beta = 0.7, cap_kappa = -1.0, cap_kmin = 0.0, cap_kmax = 1.0;
  int cap_steps = 101;
  std::string cap_out = "capacity.csv";
  capacity->add_option("--config", cap_config, "JSON config file (flags override it)");
  capacity->add_option("--alpha", cap_alpha, "costly sub-channel crossover complement");
  capacity->add_option("--beta", cap_beta, "free sub-channel crossover complement");
  capacity->add_option("--kappa", cap_kappa, "single cost level");
  capacity->add_option("--kappa-min", cap_kmin, "grid start");
  capacity->add_option("--kappa-max", cap_kmax, "grid end");
  capacity->add_option("--kappa-steps", cap_steps, "grid size");
  capacity->add_option("--out", cap_out, "output CSV name");

  // ---- match
  auto* match = app.add_subcommand("match", "verify R(D) = C(kappa=m) at one (p, D)");
  std::string match_config;
  double match_p = 0.25, match_d = 0.1;
  std::string match_out = "match.json";
  match->add_option("--config", match_config, "JSON config file (flags override it)");
  match->add_option("--p", match_p, "source flip probability");
  match->add_option("--D", match_d, "distortion level");
  match->add_option("--out", match_out, "output JSON name");

  // ---- simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo excess-distortion experiment");
  std::string sim_config;
  std::string sim_scheme = "unmatched";
  double sim_p = 0.25, sim_d_level = 0.1, sim_threshold = -1.0, sim_delta = -1.0;
  int sim_n = 8;
  long long sim_trials = 100000;
  std::uint64_t sim_seed = 0;
  std::string sim_init = "fixed";
  std::string sim_out = "simulate.csv";
  simulate->add_option("--config", sim_config, "JSON config file (flags override it)");
  simulate->add_option("--scheme", sim_scheme, "unmatched | matched | matched-feedback");
  simulate->add_option("--p", sim_p, "source flip probability");
  simulate->add_option("--D", sim_d_level, "design distortion of the scheme");
  simulate->add_option("--n", sim_n, "horizon (n+1 symbols per trial)");
  simulate->add_option("--trials", sim_trials, "number of trials");
  simulate->add_option("--d", sim_threshold, "excess threshold d");
  simulate->add_option("--delta", sim_delta, "excess margin; d = delta + E[S_n]/(n+1)");
  simulate->add_option("--seed", sim_seed, "master RNG seed");
  simulate->add_option("--init", sim_init, "initial state policy: fixed | stationary");
  simulate->add_option("--out", sim_out, "output CSV name");

  // ---- bound
  auto* bound = app.add_subcommand("bound", "concentration bound curve over horizons");
  std::string bound_config;
  double bound_p = 0.25, bound_d = 0.1, bound_delta = 0.01;
  long long bound_nmin = 1000, bound_nmax = 10000000;
  int bound_steps = 41;
  std::string bound_spacing = "log";
  std::string bound_out = "bound.csv";
  bound->add_option("--config", bound_config, "JSON config file (flags override it)");
  bound->add_option("--p", bound_p, "source flip probability");
  bound->add_option("--D", bound_d, "distortion level");
  bound->add_option("--delta", bound_delta, "excess margin");
  bound->add_option("--n-min", bound_nmin, "grid start");
  bound->add_option("--n-max", bound_nmax, "grid end");
  bound->add_option("--n-steps", bound_steps, "grid size");
  bound->add_option("--spacing", bound_spacing, "log | linear");
  bound->add_option("--out", bound_out, "output CSV name");

  // ---- exact
  auto* exact = app.add_subcommand("exact", "exact small-horizon analysis by enumeration");
  std::string exact_config;
  std::string exact_scheme = "unmatched";
  double exact_p = 0.25, exact_d = 0.1;
  int exact_n = 3;
  std::string exact_init = "fixed";
  std::string exact_out = "exact.json";
  exact->add_option("--config", exact_config, "JSON config file (flags override it)");
  exact->add_option("--scheme", exact_scheme, "unmatched | matched | matched-feedback");
  exact->add_option("--p", exact_p, "source flip probability");
  exact->add_option("--D", exact_d, "distortion level");
  exact->add_option("--n", exact_n, "horizon");
  exact->add_option("--init", exact_init, "initial state policy: fixed | stationary");
  exact->add_option("--out", exact_out, "output JSON name");

  // ---- rerun
  auto* rerun = app.add_subcommand("rerun", "re-run an experiment from its manifest");
  std::string rerun_manifest;
  rerun->add_option("--manifest", rerun_manifest, "manifest JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const fs::path out_dir = resolve_out_dir(out_dir_flag);

    if (rdf->parsed()) {
      const json cfg = load_config(rdf_config);
      config_override(*rdf, "--p", cfg, "p", rdf_p);
      config_override(*rdf, "--d", cfg, "d", rdf_d);
      config_override(*rdf, "--d-min", cfg, "d_min", rdf_dmin);
      config_override(*rdf, "--d-max", cfg, "d_max", rdf_dmax);
      config_override(*rdf, "--d-steps", cfg, "d_steps", rdf_steps);
      config_override(*rdf, "--solver", cfg, "solver", rdf_solver);
      config_override(*rdf, "--out", cfg, "out", rdf_out);
      json prm;
      if (rdf->count("--d") > 0 || cfg.contains("d")) {
        prm = {{"p", rdf_p}, {"d_min", rdf_d}, {"d_max", rdf_d}, {"d_steps", 1}};
      } else {
        prm = {{"p", rdf_p}, {"d_min", rdf_dmin}, {"d_max", rdf_dmax}, {"d_steps", rdf_steps}};
      }
      prm["solver"] = rdf_solver;
      prm["out"] = rdf_out;
      return dispatch("rdf", prm, out_dir, threads);
    }

    if (capacity->parsed()) {
      const json cfg = load_config(cap_config);
      config_override(*capacity, "--alpha", cfg, "alpha", cap_alpha);
      config_override(*capacity, "--beta", cfg, "beta", cap_beta);
      config_override(*capacity, "--kappa", cfg, "kappa", cap_kappa);
      config_override(*capacity, "--kappa-min", cfg, "kappa_min", cap_kmin);
      config_override(*capacity, "--kappa-max", cfg, "kappa_max", cap_kmax);
      config_override(*capacity, "--kappa-steps", cfg, "kappa_steps", cap_steps);
      config_override(*capacity, "--out", cfg, "out", cap_out);
      json prm;
      if (capacity->count("--kappa") > 0 || cfg.contains("kappa")) {
        prm = {{"alpha", cap_alpha}, {"beta", cap_beta}, {"kappa_min", cap_kappa},
               {"kappa_max", cap_kappa}, {"kappa_steps", 1}};
      } else {
        prm = {{"alpha", cap_alpha}, {"beta", cap_beta}, {"kappa_min", cap_kmin},
               {"kappa_max", cap_kmax}, {"kappa_steps", cap_steps}};
      }
      prm["out"] = cap_out;
      return dispatch("capacity", prm, out_dir, threads);
    }

    if (match->parsed()) {
      const json cfg = load_config(match_config);
      config_override(*match, "--p", cfg, "p", match_p);
      config_override(*match, "--D", cfg, "D", match_d);
      config_override(*match, "--out", cfg, "out", match_out);
      const json prm = {{"p", match_p}, {"D", match_d}, {"out", match_out}};
      return dispatch("match", prm, out_dir, threads);
    }

    if (simulate->parsed()) {
      const json cfg = load_config(sim_config);
      config_override(*simulate, "--scheme", cfg, "scheme", sim_scheme);
      config_override(*simulate, "--p", cfg, "p", sim_p);
      config_override(*simulate, "--D", cfg, "D", sim_d_level);
      config_override(*simulate, "--n", cfg, "n", sim_n);
      config_override(*simulate, "--trials", cfg, "trials", sim_trials);
      config_override(*simulate, "--d", cfg, "d", sim_threshold);
      config_override(*simulate, "--delta", cfg, "delta", sim_delta);
      config_override(*simulate, "--seed", cfg, "seed", sim_seed);
      config_override(*simulate, "--init", cfg, "init", sim_init);
      config_override(*simulate, "--out", cfg, "out", sim_out);
      const bool has_d = simulate->count("--d") > 0 || cfg.contains("d");
      const bool has_delta = simulate->count("--delta") > 0 || cfg.contains("delta");
      if (has_d == has_delta) {
        throw std::domain_error("simulate: give exactly one of --d and --delta");
      }
      json prm = {{"scheme", sim_scheme}, {"p", sim_p},       {"D", sim_d_level},
                  {"n", sim_n},           {"trials", sim_trials}, {"seed", sim_seed},
                  {"init", sim_init},     {"out", sim_out}};
      if (has_d) {
        prm["mode"] = "d";
        prm["d"] = sim_threshold;
      } else {
        prm["mode"] = "delta";
        prm["delta"] = sim_delta;
      }
      return dispatch("simulate", prm, out_dir, threads);
    }

    if (bound->parsed()) {
      const json cfg = load_config(bound_config);
      config_override(*bound, "--p", cfg, "p", bound_p);
      config_override(*bound, "--D", cfg, "D", bound_d);
      config_override(*bound, "--delta", cfg, "delta", bound_delta);
      config_override(*bound, "--n-min", cfg, "n_min", bound_nmin);
      config_override(*bound, "--n-max", cfg, "n_max", bound_nmax);
      config_override(*bound, "--n-steps", cfg, "n_steps", bound_steps);
      config_override(*bound, "--spacing", cfg, "spacing", bound_spacing);
      config_override(*bound, "--out", cfg, "out", bound_out);
      const json prm = {{"p", bound_p},     {"D", bound_d},         {"delta", bound_delta},
                        {"n_min", bound_nmin}, {"n_max", bound_nmax}, {"n_steps", bound_steps},
                        {"spacing", bound_spacing}, {"out", bound_out}};
      return dispatch("bound", prm, out_dir, threads);
    }

    if (exact->parsed()) {
      const json cfg = load_config(exact_config);
      config_override(*exact, "--scheme", cfg, "scheme", exact_scheme);
      config_override(*exact, "--p", cfg, "p", exact_p);
      config_override(*exact, "--D", cfg, "D", exact_d);
      config_override(*exact, "--n", cfg, "n", exact_n);
      config_override(*exact, "--init", cfg, "init", exact_init);
      config_override(*exact, "--out", cfg, "out", exact_out);
      const json prm = {{"scheme", exact_scheme}, {"p", exact_p}, {"D", exact_d},
                        {"n", exact_n},           {"init", exact_init}, {"out", exact_out}};
      return dispatch("exact", prm, out_dir, threads);
    }

    if (rerun->parsed()) {
      std::ifstream in(rerun_manifest);
      if (!in) throw IoError("cannot read manifest " + rerun_manifest);
      json manifest;
      in >> manifest;
      const fs::path dir = out_dir_flag.empty() && !std::getenv("NRD_OUT_DIR")
                               ? fs::path(rerun_manifest).parent_path()
                               : out_dir;
      return dispatch(manifest.at("command").get<std::string>(), manifest.at("parameters"),
                      dir.empty() ? "." : dir, threads);
    }
  } catch (const IoError& e) {
    std::cerr << "nrd: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const BudgetError& e) {
    std::cerr << "nrd: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "nrd: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
