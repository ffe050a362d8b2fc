#include "irs_si/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "irs_si/analysis.hpp"
#include "irs_si/errors.hpp"
#include "irs_si/io.hpp"
#include "json.hpp"

namespace irs_si {

namespace {

using nlohmann::json;

struct RunSpec {
  std::string scenario_path;
  std::string scheme = "cct";
  int grid_points = 10;
  int t_alpha = 80;
  int t_lambda = 80;
  int t_g = 1000;
  std::uint64_t seed = 0;
  std::string output_path;
  bool no_pareto_filter = false;
};

struct InfeasibleScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgorithmParams params_of(const RunSpec& spec) {
  AlgorithmParams params;
  params.t_alpha = spec.t_alpha;
  params.t_lambda = spec.t_lambda;
  params.t_g = spec.t_g;
  return params;
}

void require_feasible(const ChannelSet& ch) {
  const FeasibilityResult f = feasibility_check(ch);
  if (f.verdict == Feasibility::Infeasible)
    throw InfeasibleScenario("no positive secrecy rate is achievable: the direct link of user " +
                             std::to_string(*f.certificate_user + 1) +
                             " dominates user 1 for every phase vector");
}

RegionBoundary run_region(const ChannelSet& ch, double p, const RunSpec& spec) {
  if (spec.grid_points < 2) throw ConfigError("--grid must be at least 2");
  SweepOptions options;
  options.grid_points = spec.grid_points;
  options.seed = spec.seed;
  options.pareto_filter = !spec.no_pareto_filter;
  return sweep_region(ch, p, scheme_from_string(spec.scheme), params_of(spec), options);
}

void write_outputs(const std::vector<TaggedRegion>& regions, const RunSpec& spec) {
  const Scheme scheme = scheme_from_string(spec.scheme);
  std::ofstream csv(spec.output_path, std::ios::binary);
  if (!csv) throw ConfigError("cannot write " + spec.output_path);
  write_region_csv(csv, regions, scheme, spec.seed);
  std::ofstream phases(spec.output_path + ".phases.json", std::ios::binary);
  if (!phases) throw ConfigError("cannot write " + spec.output_path + ".phases.json");
  write_phases_json(phases, regions, scheme, spec.seed);
}

int cmd_region(const RunSpec& spec) {
  const Scenario sc = load_scenario(spec.scenario_path);
  const ChannelSet ch = sc.resolve_channels();
  require_feasible(ch);
  write_outputs({TaggedRegion{std::nullopt, run_region(ch, sc.power(), spec)}}, spec);
  return kExitOk;
}

int cmd_sweep_power(const RunSpec& spec, const std::vector<double>& powers) {
  if (powers.empty()) throw ConfigError("--powers needs at least one value");
  const Scenario sc = load_scenario(spec.scenario_path);
  const ChannelSet ch = sc.resolve_channels();
  require_feasible(ch);
  std::vector<TaggedRegion> regions;
  for (double p : powers) {
    if (!(p > 0.0)) throw ConfigError("powers must be positive");
    regions.push_back({p, run_region(ch, p, spec)});
  }
  write_outputs(regions, spec);
  return kExitOk;
}

int cmd_analyze(const RunSpec& spec, const std::string& v_source, std::optional<double> alpha_arg,
                double r_m, std::ostream& out) {
  const Scenario sc = load_scenario(spec.scenario_path);
  const ChannelSet ch = sc.resolve_channels();
  const double p = sc.power();
  const AlgorithmParams params = params_of(spec);
  const double alpha = alpha_arg.value_or(p);
  if (!(alpha >= 0.0 && alpha <= p)) throw ConfigError("--alpha must lie in [0, P]");
  if (!(r_m >= 0.0)) throw ConfigError("--r-m must be nonnegative");

  json report;
  const FeasibilityResult f = feasibility_check(ch);
  report["feasibility"] = {
      {"verdict", f.verdict == Feasibility::Feasible     ? "Feasible"
                  : f.verdict == Feasibility::Infeasible ? "Infeasible"
                                                         : "Undetermined"},
      {"certificate_user", f.certificate_user ? json(*f.certificate_user + 1) : json(nullptr)},
      {"aligned_gains", f.aligned_gains}};

  PhaseVector v;
  if (std::filesystem::is_regular_file(v_source)) {
    const std::vector<double> phases = load_phases(v_source);
    if (static_cast<int>(phases.size()) != ch.n())
      throw ConfigError("phase file has " + std::to_string(phases.size()) + " entries, expected " +
                        std::to_string(ch.n()));
    v = PhaseVector::from_phases(phases);
  } else {
    const Scheme scheme = scheme_from_string(v_source);
    if (scheme == Scheme::NoIrs) {
      v = PhaseVector::ones(ch.n());
    } else if (f.verdict != Feasibility::Infeasible) {
      SweepOptions options;
      options.seed = spec.seed;
      options.pareto_filter = false;
      options.threads = 1;
      options.targets = {r_m};
      const RegionBoundary rb = sweep_region(ch, p, scheme, params, options);
      v = rb.points.front().phase_vector;
      if (v.size() != ch.n()) v = PhaseVector::ones(ch.n());
    } else {
      v = PhaseVector::ones(ch.n());
    }
  }
  report["v_phases_rad"] = v.phases();
  report["alpha_w"] = alpha;
  report["r_m"] = r_m;

  report["classification"] = nullptr;
  report["e_factors"] = nullptr;
  report["eta"] = nullptr;
  if (ch.k() == 2) {
    const EnhancementReport e = enhancement_analysis(ch, v, alpha, p, r_m);
    report["e_factors"] = e.e_factors;
    report["eta"] = e.eta;
    report["identity_residual"] = e.identity_residual;
    try {
      report["classification"] = to_string(proposition3_classify(ch, v));
    } catch (const PreconditionError& ex) {
      report["classification_note"] = ex.what();
    }
  } else {
    report["classification_note"] = "classification needs exactly two users";
  }

  json gaps = {{"t_alpha", params.t_alpha}};
  const std::vector<CMatrix> forms = normalized_forms(ch);
  const double tr_t1 = forms[0].trace().real() * ch.sigma2[0];
  gaps["bound_tight"] = gap_bound_tight(p, ch.n(), tr_t1, ch.sigma2[0], params.t_alpha);
  gaps["bound_general"] = nullptr;
  gaps["delta_c"] = nullptr;
  gaps["bound_worst_case"] = gap_bound_general(p, ch.n(), tr_t1, ch.sigma2[0], params.t_alpha, 0.0).worst_case;
  if (f.verdict != Feasibility::Infeasible && ch.k() >= 2) {
    const CctResult c = cct_fixed_alpha(ch, p, r_m, alpha, params.solver);
    if (c.status == CctStatus::Solved) {
      const double achieved = secrecy_rate(ch, v, alpha);
      const double delta_c = std::max(0.0, c.log2_bound() - achieved);
      gaps["delta_c"] = delta_c;
      gaps["bound_general"] = gap_bound_general(p, ch.n(), tr_t1, ch.sigma2[0], params.t_alpha, delta_c).general;
    }
  }
  report["gap_bounds"] = gaps;

  const ComplexityEstimate ce = complexity_estimate(ch.n(), ch.k(), params.t_alpha, params.t_lambda, params.t_g);
  report["complexity"] = {{"n_var", ce.n_var}, {"a1_1", ce.a1_1}, {"a1_2", ce.a1_2}, {"a2_2", ce.a2_2},
                          {"g", ce.g},         {"a1", ce.a1},     {"a2", ce.a2}};

  const std::string text = report.dump(2) + "\n";
  if (spec.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(spec.output_path, std::ios::binary);
    if (!file) throw ConfigError("cannot write " + spec.output_path);
    file << text;
  }
  if (f.verdict == Feasibility::Infeasible)
    throw InfeasibleScenario("direct link of user " + std::to_string(*f.certificate_user + 1) +
                             " dominates user 1 for every phase vector");
  return kExitOk;
}

int cmd_channels(const RunSpec& spec, std::ostream& out) {
  const Scenario sc = load_scenario(spec.scenario_path);
  const std::string text = channels_to_json(sc.resolve_channels()) + "\n";
  if (spec.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(spec.output_path, std::ios::binary);
    if (!file) throw ConfigError("cannot write " + spec.output_path);
    file << text;
  }
  return kExitOk;
}

void add_run_flags(CLI::App* cmd, RunSpec& spec, bool with_grid) {
  cmd->add_option("--scenario", spec.scenario_path, "Scenario JSON file")->required();
  cmd->add_option("--t-alpha", spec.t_alpha, "Alpha grid size")->capture_default_str();
  cmd->add_option("--t-lambda", spec.t_lambda, "Lambda grid size (wscm)")->capture_default_str();
  cmd->add_option("--t-g", spec.t_g, "Gaussian randomization draws")->capture_default_str();
  cmd->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  if (with_grid) {
    cmd->add_option("--scheme", spec.scheme, "cct, wscm, random-irs, no-irs, tdma, upper-bound or oracle")
        ->capture_default_str();
    cmd->add_option("--grid", spec.grid_points, "Number of multicast-rate targets")->capture_default_str();
    cmd->add_flag("--no-pareto-filter", spec.no_pareto_filter, "Keep the raw boundary points");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multicast/secrecy rate regions for IRS-assisted service integration", "irs-region"};
  app.require_subcommand(1);

  RunSpec spec;
  std::vector<std::string> powers_text;
  std::string v_source = "cct";
  std::optional<double> alpha;
  double r_m = 0.0;

  auto* region = app.add_subcommand("region", "Compute one region boundary");
  add_run_flags(region, spec, true);
  region->add_option("--out", spec.output_path, "Output CSV")->required();

  auto* sweep = app.add_subcommand("sweep-power", "One region per transmit power");
  add_run_flags(sweep, spec, true);
  sweep->add_option("--out", spec.output_path, "Output CSV")->required();
  sweep->add_option("--powers", powers_text, "Transmit powers (W, or with dBm/dB suffix)")
      ->delimiter(',')
      ->required();

  auto* analyze = app.add_subcommand("analyze", "Feasibility, classification and bounds report");
  add_run_flags(analyze, spec, false);
  analyze->add_option("--v-source", v_source, "Phase file (JSON radians) or scheme name")->capture_default_str();
  analyze->add_option("--alpha", alpha, "Confidential power in W (default P)");
  analyze->add_option("--r-m", r_m, "Multicast target in bits")->capture_default_str();
  analyze->add_option("--out", spec.output_path, "Output JSON (default stdout)");

  auto* channels = app.add_subcommand("channels", "Dump the channel realization as JSON");
  channels->add_option("--scenario", spec.scenario_path, "Scenario JSON file")->required();
  channels->add_option("--out", spec.output_path, "Output JSON (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "irs-region: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*region) return cmd_region(spec);
    if (*sweep) {
      std::vector<double> powers;
      for (const auto& t : powers_text)
        if (!t.empty()) powers.push_back(parse_power(t));
      return cmd_sweep_power(spec, powers);
    }
    if (*analyze) return cmd_analyze(spec, v_source, alpha, r_m, out);
    if (*channels) return cmd_channels(spec, out);
  } catch (const InfeasibleScenario& e) {
    err << "irs-region: infeasible scenario: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const SolverError& e) {
    err << "irs-region: solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "irs-region: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace irs_si
