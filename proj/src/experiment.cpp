#include "risim/experiment.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "risim/export.hpp"
#include "risim/units.hpp"

namespace risim {

using ordered_json = nlohmann::ordered_json;

namespace {

Vec3 target_center(const TargetSpec& spec) {
  if (const auto* disk = std::get_if<UniformDisk>(&spec.variant))
    return disk->center;
  const auto& mix = std::get<GaussianMixture>(spec.variant);
  Vec3 c{};
  for (const auto& comp : mix.components) {
    c.x += comp.weight * comp.mean_x;
    c.y += comp.weight * comp.mean_y;
  }
  return c;
}

ordered_json report_to_json(const EvaluationReport& report,
                            const MethodResult& result) {
  ordered_json j;
  j["method"] = report.method;
  j["min_expected_snr_db"] = report.min_expected_snr_db;
  j["multicast_rate_bps_hz"] = report.multicast_rate_bps_hz;
  j["per_point_expected_snr_db"] = report.per_point_expected_snr_db;
  j["lifted_optimum"] = result.lifted_optimum;
  j["rank1_value"] = result.rank1_value;
  j["theta_bar_seconds"] = result.theta_bar_seconds;
  j["total_seconds"] = result.total_seconds;
  j["solver_iterations"] = result.solver_iterations;
  j["n_points"] = report.n_points;
  j["n_mc"] = report.n_mc;
  j["n_realizations"] = report.n_realizations;
  j["perturbation_seed"] = report.perturbation_seed;
  j["sampling_seed"] = result.points.seed;
  return j;
}

void write_cdf_csv(const std::string& path,
                   const std::vector<CdfPoint>& cdf) {
  // downsample long CDFs to about 2000 rows, keeping the extremes
  const std::size_t stride = std::max<std::size_t>(1, cdf.size() / 2000);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cdf.size(); i += stride)
    rows.push_back({format_number(cdf[i].snr_db),
                    format_number(cdf[i].probability)});
  if (!cdf.empty() && (cdf.size() - 1) % stride != 0)
    rows.push_back({format_number(cdf.back().snr_db),
                    format_number(cdf.back().probability)});
  write_csv_atomic(path, {"snr_db", "probability"}, rows);
}

std::string value_token(double v) {
  std::string s = format_number(v);
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

}  // namespace

LinkAngles target_center_angles(const ScenarioConfig& config) {
  const Vec3 center_rel = target_center(config.target) - config.bs_position;
  return link_angles(config.ris_displacement(), center_rel);
}

int run_experiment(const ScenarioConfig& config, const SweepSpec& sweep,
                   const std::string& out_dir, const SolveOptions& opts,
                   std::ostream* log) {
  if (sweep.values.empty())
    throw std::invalid_argument("sweep.values must be nonempty");
  if (sweep.methods.empty())
    throw std::invalid_argument("sweep.methods must be nonempty");
  if (sweep.instances < 1)
    throw std::invalid_argument("sweep.instances must be >= 1");

  ordered_json meta;
  meta["config"] = ordered_json::parse(scenario_to_json_text(config));
  meta["sweep"] = ordered_json{{"parameter", sweep.parameter},
                               {"values", sweep.values},
                               {"methods", sweep.methods},
                               {"instances", sweep.instances}};
  write_text_atomic(out_dir + "/metadata.json", meta.dump(2) + "\n");

  const std::vector<std::string> header{
      "parameter",         "value",       "instance",
      "method",            "status",      "min_expected_snr_db",
      "multicast_rate_bps_hz", "lifted_optimum", "rank1_value",
      "theta_bar_seconds", "total_seconds"};
  std::vector<std::vector<std::string>> summary;
  bool any_failed = false;

  for (double value : sweep.values) {
    const ScenarioConfig cell_config =
        apply_sweep_value(config, sweep.parameter, value);
    for (int instance = 0; instance < sweep.instances; ++instance) {
      const GroundPointSet points =
          sample_instance_points(cell_config, instance);
      for (const auto& method : sweep.methods) {
        const std::string stem = out_dir + "/" + sweep.parameter + "_" +
                                 value_token(value) + "_" + method + "_inst" +
                                 std::to_string(instance);
        try {
          const MethodResult result =
              run_method(method, cell_config, opts, &points);
          const EvaluationReport report = evaluate_configuration(
              cell_config, method, result.config.theta, points);

          ordered_json j = report_to_json(report, result);
          j["parameter"] = sweep.parameter;
          j["value"] = value;
          j["instance"] = instance;
          write_text_atomic(stem + ".json", j.dump(2) + "\n");
          write_cdf_csv(stem + "_cdf.csv", report.snr_cdf);

          summary.push_back({sweep.parameter, format_number(value),
                             std::to_string(instance), method, "ok",
                             format_number(report.min_expected_snr_db),
                             format_number(report.multicast_rate_bps_hz),
                             format_number(result.lifted_optimum),
                             format_number(result.rank1_value),
                             format_number(result.theta_bar_seconds),
                             format_number(result.total_seconds)});
          if (log)
            *log << "cell " << sweep.parameter << "=" << value << " inst="
                 << instance << " method=" << method
                 << " min_snr_db=" << report.min_expected_snr_db << '\n';
        } catch (const std::exception& e) {
          any_failed = true;
          ordered_json j;
          j["parameter"] = sweep.parameter;
          j["value"] = value;
          j["instance"] = instance;
          j["method"] = method;
          j["error"] = e.what();
          write_text_atomic(stem + ".json", j.dump(2) + "\n");
          summary.push_back({sweep.parameter, format_number(value),
                             std::to_string(instance), method, "error", "",
                             "", "", "", "", ""});
          if (log)
            *log << "cell " << sweep.parameter << "=" << value << " inst="
                 << instance << " method=" << method << " failed: " << e.what()
                 << '\n';
        }
      }
    }
  }
  write_csv_atomic(out_dir + "/summary.csv", header, summary);
  return any_failed ? 1 : 0;
}

int emit_pattern(const ScenarioConfig& config, const std::string& method,
                 PatternAxis axis, const std::string& out_path,
                 const SolveOptions& opts, int grid_points,
                 double half_span_deg) {
  if (grid_points < 2)
    throw std::invalid_argument("emit_pattern: grid_points must be >= 2");

  const MethodResult result = run_method(method, config, opts);
  const LinkAngles center = target_center_angles(config);

  const double center_angle =
      axis == PatternAxis::azimuth ? center.azimuth : center.elevation;
  const double half_span = deg_to_rad(half_span_deg);
  std::vector<double> grid(grid_points);
  for (int i = 0; i < grid_points; ++i)
    grid[i] = center_angle - half_span +
              2.0 * half_span * i / (grid_points - 1);

  const PatternSlice slice =
      radiation_pattern(result.config.theta, config.layout(),
                        config.ris_displacement(), center, axis, grid,
                        config.wavelength());

  std::vector<std::vector<std::string>> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rows.push_back({format_number(rad_to_deg(slice.angles[i])),
                    format_number(rad_to_deg(slice.angles[i] - center_angle)),
                    format_number(slice.gain_db[i])});
  write_csv_atomic(out_path, {"angle_deg", "offset_deg", "gain_db"}, rows);

  ordered_json meta;
  meta["config"] = ordered_json::parse(scenario_to_json_text(config));
  meta["method"] = method;
  meta["axis"] = axis == PatternAxis::azimuth ? "azimuth" : "elevation";
  meta["center_angle_deg"] = rad_to_deg(center_angle);
  meta["peak_angle_deg"] = rad_to_deg(pattern_peak_angle(slice));
  meta["beamwidth_3db_deg"] = rad_to_deg(pattern_beamwidth_3db(slice));
  write_text_atomic(out_path + ".meta.json", meta.dump(2) + "\n");
  return 0;
}

int compare_methods(const ScenarioConfig& config,
                    const std::vector<std::string>& methods,
                    const std::string& out_dir, const SolveOptions& opts) {
  if (methods.size() < 2)
    throw std::invalid_argument("compare_methods: need at least two methods");

  const GroundPointSet points = sample_instance_points(config, 0);
  std::vector<EvaluationReport> reports;
  std::vector<MethodResult> results;
  for (const auto& m : methods) {
    results.push_back(run_method(m, config, opts, &points));
    reports.push_back(evaluate_configuration(config, m,
                                             results.back().config.theta,
                                             points));
  }

  std::vector<std::vector<std::string>> rows;
  ordered_json j;
  j["baseline"] = methods.front();
  j["methods"] = ordered_json::array();
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const double d_snr =
        reports[i].min_expected_snr_db - reports[0].min_expected_snr_db;
    const double d_rate =
        reports[i].multicast_rate_bps_hz - reports[0].multicast_rate_bps_hz;
    rows.push_back({methods[i],
                    format_number(reports[i].min_expected_snr_db),
                    format_number(reports[i].multicast_rate_bps_hz),
                    format_number(d_snr), format_number(d_rate)});
    ordered_json mj = report_to_json(reports[i], results[i]);
    mj["delta_min_expected_snr_db"] = d_snr;
    mj["delta_multicast_rate_bps_hz"] = d_rate;
    j["methods"].push_back(std::move(mj));
  }
  write_csv_atomic(out_dir + "/compare.csv",
                   {"method", "min_expected_snr_db", "multicast_rate_bps_hz",
                    "delta_min_expected_snr_db", "delta_multicast_rate_bps_hz"},
                   rows);
  j["config"] = ordered_json::parse(scenario_to_json_text(config));
  write_text_atomic(out_dir + "/compare.json", j.dump(2) + "\n");
  return 0;
}

}  // namespace risim
