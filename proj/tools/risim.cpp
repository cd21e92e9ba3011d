// Command-line front end: solve for a configuration, evaluate it, run sweep
// grids, emit radiation-pattern slices, or compare methods with paired seeds.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "risim/experiment.hpp"
#include "risim/export.hpp"
#include "risim/methods.hpp"
#include "risim/units.hpp"

namespace {

using risim::ScenarioConfig;

struct CommonArgs {
  std::string config_path;
  std::string out = "out";
  std::string method = "rife";
  std::string matrices = "closed_form";
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_method = true) {
  cmd->add_option("--config", args.config_path, "scenario JSON file");
  cmd->add_option("--out", args.out, "output directory or file");
  if (with_method)
    cmd->add_option("--method", args.method,
                    "rife | agnostic | fair_rife | fair_agnostic");
  cmd->add_option("--matrices", args.matrices,
                  "gain matrix construction: closed_form | monte_carlo")
      ->check(CLI::IsMember({"closed_form", "monte_carlo"}));
  cmd->add_option("--seed", args.seed,
                  "master seed, split into sampling/perturbation/randomization")
      ->each([&args](const std::string&) { args.seed_set = true; });
  cmd->add_flag("--verbose", args.verbose, "solver and progress diagnostics");
}

ScenarioConfig resolve_config(const CommonArgs& args) {
  ScenarioConfig config = args.config_path.empty()
                              ? ScenarioConfig{}
                              : risim::load_config(args.config_path);
  if (args.seed_set) config.seeds = risim::derive_seeds(args.seed);
  return config;
}

risim::SolveOptions resolve_options(const CommonArgs& args) {
  risim::SolveOptions opts;
  opts.matrices = args.matrices == "monte_carlo"
                      ? risim::GainMatrixMode::monte_carlo
                      : risim::GainMatrixMode::closed_form;
  opts.log = args.verbose ? &std::cerr : nullptr;
  return opts;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_solve(const CommonArgs& args) {
  const ScenarioConfig config = resolve_config(args);
  const risim::MethodResult result =
      risim::run_method(args.method, config, resolve_options(args));

  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < result.config.theta.size(); ++i)
    rows.push_back({std::to_string(i),
                    risim::format_number(result.config.theta(i).real()),
                    risim::format_number(result.config.theta(i).imag())});
  risim::write_csv_atomic(args.out + "/theta.csv", {"index", "re", "im"},
                          rows);
  risim::write_complex_matrix_csv(args.out + "/theta_bar.csv",
                                  result.theta_bar);

  nlohmann::ordered_json meta;
  meta["config"] = nlohmann::ordered_json::parse(
      risim::scenario_to_json_text(config));
  meta["method"] = result.method;
  meta["lifted_optimum"] = result.lifted_optimum;
  meta["rank1_value"] = result.rank1_value;
  meta["theta_bar_seconds"] = result.theta_bar_seconds;
  meta["total_seconds"] = result.total_seconds;
  risim::write_text_atomic(args.out + "/solve.json", meta.dump(2) + "\n");
  std::cout << "solved " << result.method
            << ": objective=" << result.rank1_value
            << " (relaxation " << result.lifted_optimum << ")\n";
  return 0;
}

int cmd_evaluate(const CommonArgs& args) {
  const ScenarioConfig config = resolve_config(args);
  const risim::GroundPointSet points =
      risim::sample_instance_points(config, 0);
  const risim::MethodResult result =
      risim::run_method(args.method, config, resolve_options(args), &points);
  const risim::EvaluationReport report = risim::evaluate_configuration(
      config, args.method, result.config.theta, points);

  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["min_expected_snr_db"] = report.min_expected_snr_db;
  j["multicast_rate_bps_hz"] = report.multicast_rate_bps_hz;
  j["per_point_expected_snr_db"] = report.per_point_expected_snr_db;
  j["config"] = nlohmann::ordered_json::parse(
      risim::scenario_to_json_text(config));
  risim::write_text_atomic(args.out + "/report.json", j.dump(2) + "\n");

  std::vector<std::vector<std::string>> rows;
  for (const auto& p : report.snr_cdf)
    rows.push_back({risim::format_number(p.snr_db),
                    risim::format_number(p.probability)});
  risim::write_csv_atomic(args.out + "/cdf.csv", {"snr_db", "probability"},
                          rows);
  std::cout << args.method << ": min expected SNR "
            << report.min_expected_snr_db << " dB, multicast rate "
            << report.multicast_rate_bps_hz << " bps/Hz\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-mounted reflective surface configuration toolkit"};
  app.require_subcommand(1);

  CommonArgs solve_args, eval_args, sweep_args, pattern_args, compare_args;

  auto* solve = app.add_subcommand("solve", "compute a surface configuration");
  add_common(solve, solve_args);

  auto* evaluate =
      app.add_subcommand("evaluate", "solve and report coverage metrics");
  add_common(evaluate, eval_args);

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep grid");
  add_common(sweep, sweep_args, false);
  std::string sweep_param = "sigma_deg";
  std::string sweep_values = "2,5,20";
  std::string sweep_methods = "rife,agnostic";
  int sweep_instances = 1;
  sweep->add_option("--param", sweep_param,
                    "sigma_deg | drone_altitude_m | n_elements | area_radius_m");
  sweep->add_option("--values", sweep_values, "comma-separated values");
  sweep->add_option("--methods", sweep_methods, "comma-separated methods");
  sweep->add_option("--instances", sweep_instances,
                    "receiver placements averaged per cell");

  auto* pattern =
      app.add_subcommand("pattern", "emit a radiation pattern slice");
  add_common(pattern, pattern_args);
  std::string pattern_axis = "azimuth";
  int pattern_points = 721;
  double pattern_span = 90.0;
  pattern->add_option("--axis", pattern_axis, "azimuth | elevation")
      ->check(CLI::IsMember({"azimuth", "elevation"}));
  pattern->add_option("--grid-points", pattern_points, "rows in the slice");
  pattern->add_option("--half-span-deg", pattern_span,
                      "sweep half-width around the target center");

  auto* compare =
      app.add_subcommand("compare", "paired-seed comparison of methods");
  add_common(compare, compare_args, false);
  std::string compare_list = "rife,agnostic";
  compare->add_option("--methods", compare_list, "comma-separated methods");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (evaluate->parsed()) return cmd_evaluate(eval_args);
    if (sweep->parsed()) {
      risim::SweepSpec spec;
      spec.parameter = sweep_param;
      for (const auto& v : split_list(sweep_values)) spec.values.push_back(std::stod(v));
      spec.methods = split_list(sweep_methods);
      spec.instances = sweep_instances;
      const ScenarioConfig config = resolve_config(sweep_args);
      return risim::run_experiment(config, spec, sweep_args.out,
                                   resolve_options(sweep_args),
                                   sweep_args.verbose ? &std::cerr : nullptr);
    }
    if (pattern->parsed()) {
      const ScenarioConfig config = resolve_config(pattern_args);
      const auto axis = pattern_axis == "elevation"
                            ? risim::PatternAxis::elevation
                            : risim::PatternAxis::azimuth;
      std::string out = pattern_args.out;
      if (out.find(".csv") == std::string::npos) out += "/pattern.csv";
      return risim::emit_pattern(config, pattern_args.method, axis, out,
                                 resolve_options(pattern_args), pattern_points,
                                 pattern_span);
    }
    if (compare->parsed()) {
      const ScenarioConfig config = resolve_config(compare_args);
      return risim::compare_methods(config, split_list(compare_list),
                                    compare_args.out,
                                    resolve_options(compare_args));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
