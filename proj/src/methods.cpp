#include "risim/methods.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "risim/rng.hpp"
#include "risim/robust.hpp"

namespace risim {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point t0) {
  return std::chrono::duration<double>(clock::now() - t0).count();
}

RobustGainMatrix build_gain_matrix(const ScenarioConfig& config,
                                   const EtaCoefficients& eta,
                                   const RisLayout& layout,
                                   const PerturbationStats& perturb,
                                   GainMatrixMode mode, int point_index) {
  const double lambda = config.wavelength();
  if (perturb.has_mean_tilt()) {
    // closed form only covers the hovering case
    const int draws = perturb.is_zero() ? 1 : config.n_mc;
    return gain_matrix_mc(eta, layout, perturb, lambda, draws,
                          split_seed(config.seeds.perturbation,
                                     0x4d430000ULL + point_index));
  }
  if (mode == GainMatrixMode::monte_carlo && !perturb.is_zero())
    return gain_matrix_mc(eta, layout, perturb, lambda, config.n_mc,
                          split_seed(config.seeds.perturbation,
                                     0x4d430000ULL + point_index));
  return gain_matrix_closed_form(eta, layout, perturb, lambda);
}

MethodResult extract_configuration(const std::string& name,
                                   const ScenarioConfig& config,
                                   const SdrProblem& problem,
                                   SdrSolution solution,
                                   GroundPointSet points, double theta_bar_s,
                                   clock::time_point t0, int iterations) {
  MethodResult res;
  res.method = name;
  res.config = gaussian_randomization(solution, problem,
                                      config.randomization_candidates,
                                      config.seeds.randomization);
  res.theta_bar = std::move(solution.theta_bar);
  res.points = std::move(points);
  res.lifted_optimum = solution.achieved_min;
  res.rank1_value = rank1_objective(problem, res.config.theta);
  res.theta_bar_seconds = theta_bar_s;
  res.solver_iterations = iterations;
  res.total_seconds = seconds_since(t0);
  return res;
}

}  // namespace

GroundPointSet sample_instance_points(const ScenarioConfig& config,
                                      int instance) {
  return sample_targets(config.target, config.n_w,
                        split_seed(config.seeds.sampling, instance));
}

SdrProblem build_sdr_problem(const ScenarioConfig& config,
                             const GroundPointSet& points, GainMatrixMode mode,
                             bool zero_sigma) {
  const Vec3 q = config.ris_displacement();
  const LinkAngles angles_r = config.angles_to_ris();
  const RisLayout layout = config.layout();

  PerturbationStats perturb = config.perturbation();
  if (zero_sigma) perturb.sigma_x = perturb.sigma_y = perturb.sigma_z = 0.0;

  SdrProblem problem;
  problem.n = layout.size();
  problem.gain_conj.reserve(points.points.size());
  problem.weights.reserve(points.points.size());
  for (std::size_t i = 0; i < points.points.size(); ++i) {
    const Vec3 w = points.points[i] - config.bs_position;
    const LinkAngles angles_t = link_angles(q, w);
    const EtaCoefficients eta = eta_coefficients(angles_r, angles_t);
    RobustGainMatrix gain = build_gain_matrix(config, eta, layout, perturb,
                                              mode, static_cast<int>(i));
    problem.gain_conj.push_back(gain.entries.conjugate());
    problem.weights.push_back(1.0 / (q - w).squaredNorm());
  }
  return problem;
}

namespace {

MethodResult solve_max_min(const std::string& name,
                           const ScenarioConfig& config,
                           const SolveOptions& opts, bool zero_sigma,
                           const GroundPointSet* fixed_points) {
  const auto t0 = clock::now();
  GroundPointSet points =
      fixed_points ? *fixed_points : sample_instance_points(config, 0);
  const SdrProblem problem =
      build_sdr_problem(config, points, opts.matrices, zero_sigma);

  SdrOptions sdr_opts;
  sdr_opts.tol = config.solver.tol;
  sdr_opts.feas_tol = config.solver.feas_tol;
  sdr_opts.max_iter = config.solver.max_iter;
  sdr_opts.log = opts.log;

  const auto t_solve = clock::now();
  SdrSolution solution = solve_sdr(problem, sdr_opts);
  const double solve_s = seconds_since(t_solve);
  const int iterations = solution.iterations;
  return extract_configuration(name, config, problem, std::move(solution),
                               std::move(points), solve_s, t0, iterations);
}

MethodResult combine_fair(const std::string& name,
                          const ScenarioConfig& config,
                          const SolveOptions& opts, bool zero_sigma,
                          const GroundPointSet* fixed_points) {
  const auto t0 = clock::now();
  GroundPointSet points =
      fixed_points ? *fixed_points : sample_instance_points(config, 0);
  const SdrProblem problem =
      build_sdr_problem(config, points, opts.matrices, zero_sigma);

  const auto t_solve = clock::now();
  GroundPointSet rel = points;
  for (auto& p : rel.points) p = p - config.bs_position;
  const FairWeights weights = fair_weights(config.ris_displacement(), rel);
  SdrSolution combined = fair_combination(problem, weights);
  const double solve_s = seconds_since(t_solve);
  return extract_configuration(name, config, problem, std::move(combined),
                               std::move(points), solve_s, t0, 0);
}

}  // namespace

MethodResult rife(const ScenarioConfig& config, const SolveOptions& opts,
                  const GroundPointSet* points) {
  return solve_max_min("rife", config, opts, false, points);
}

MethodResult agnostic(const ScenarioConfig& config, const SolveOptions& opts,
                      const GroundPointSet* points) {
  return solve_max_min("agnostic", config, opts, true, points);
}

MethodResult fair_rife(const ScenarioConfig& config, const SolveOptions& opts,
                       const GroundPointSet* points) {
  return combine_fair("fair_rife", config, opts, false, points);
}

MethodResult fair_agnostic(const ScenarioConfig& config,
                           const SolveOptions& opts,
                           const GroundPointSet* points) {
  return combine_fair("fair_agnostic", config, opts, true, points);
}

MethodResult run_method(const std::string& name, const ScenarioConfig& config,
                        const SolveOptions& opts,
                        const GroundPointSet* points) {
  if (name == "rife") return rife(config, opts, points);
  if (name == "agnostic") return agnostic(config, opts, points);
  if (name == "fair_rife") return fair_rife(config, opts, points);
  if (name == "fair_agnostic") return fair_agnostic(config, opts, points);
  throw std::invalid_argument("unknown method: " + name);
}

EvalContext make_eval_context(const ScenarioConfig& config,
                              const GroundPointSet& points) {
  EvalContext ctx;
  ctx.q = config.ris_displacement();
  ctx.points.reserve(points.points.size());
  for (const auto& p : points.points)
    ctx.points.push_back(p - config.bs_position);
  ctx.perturb = config.perturbation();
  ctx.params = config.channel_params();
  ctx.layout = config.layout();
  ctx.precoder = mrt_precoder(config.angles_to_ris(), config.m_antennas,
                              ctx.params.tx_power, ctx.params.wavelength);
  ctx.n_mc = config.n_mc;
  ctx.n_realizations = config.n_realizations;
  ctx.seed = config.seeds.perturbation;
  return ctx;
}

EvaluationReport evaluate_configuration(const ScenarioConfig& config,
                                        const std::string& method,
                                        const Eigen::VectorXcd& theta,
                                        const GroundPointSet& points) {
  const EvalContext ctx = make_eval_context(config, points);
  EvaluationReport report;
  report.method = method;
  report.per_point_expected_snr_db = per_point_expected_snr(ctx, theta);
  report.min_expected_snr_db =
      *std::min_element(report.per_point_expected_snr_db.begin(),
                        report.per_point_expected_snr_db.end());
  report.multicast_rate_bps_hz = multicast_rate(ctx, theta);
  report.snr_cdf = snr_cdf(ctx, theta);
  report.n_points = static_cast<int>(ctx.points.size());
  report.n_mc = ctx.n_mc;
  report.n_realizations = ctx.n_realizations;
  report.perturbation_seed = ctx.seed;
  return report;
}

}  // namespace risim
