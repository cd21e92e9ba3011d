#pragma once

#include <iosfwd>
#include <string>

#include "risim/evaluation.hpp"
#include "risim/fair.hpp"
#include "risim/optimizer.hpp"
#include "risim/scenario.hpp"

namespace risim {

enum class GainMatrixMode { closed_form, monte_carlo };

struct SolveOptions {
  GainMatrixMode matrices = GainMatrixMode::closed_form;
  std::ostream* log = nullptr;
};

struct MethodResult {
  std::string method;
  RisConfiguration config;
  Eigen::MatrixXcd theta_bar;
  GroundPointSet points;       // receiver locations the method optimized for
  double lifted_optimum = 0.0; // objective of theta_bar
  double rank1_value = 0.0;    // objective of the extracted configuration
  double theta_bar_seconds = 0.0;  // SDP solve / weighted-combination time
  double total_seconds = 0.0;
  int solver_iterations = 0;
};

// Receiver placement for instance k (k = 0 outside sweeps).
GroundPointSet sample_instance_points(const ScenarioConfig& config,
                                      int instance);

// Max-min problem for the given receivers: conjugated gain matrices (built
// per `mode`, with sigma forced to zero when `zero_sigma`) and 1/d2^2 weights.
SdrProblem build_sdr_problem(const ScenarioConfig& config,
                             const GroundPointSet& points,
                             GainMatrixMode mode, bool zero_sigma);

// Robust max-min configuration: sample receivers, build the perturbation-
// averaged gain matrices, solve the lifted relaxation, extract a rank-1
// configuration by Gaussian randomization.
MethodResult rife(const ScenarioConfig& config, const SolveOptions& opts = {},
                  const GroundPointSet* points = nullptr);

// Same pipeline with the perturbation variance zeroed during gain-matrix
// construction (evaluation still sees the true statistics).
MethodResult agnostic(const ScenarioConfig& config,
                      const SolveOptions& opts = {},
                      const GroundPointSet* points = nullptr);

// Closed-form alternative: theta_bar is the distance-weighted convex
// combination of the gain matrices, no optimization.
MethodResult fair_rife(const ScenarioConfig& config,
                       const SolveOptions& opts = {},
                       const GroundPointSet* points = nullptr);

MethodResult fair_agnostic(const ScenarioConfig& config,
                           const SolveOptions& opts = {},
                           const GroundPointSet* points = nullptr);

// Dispatch by method name; throws std::invalid_argument on unknown names.
MethodResult run_method(const std::string& name, const ScenarioConfig& config,
                        const SolveOptions& opts = {},
                        const GroundPointSet* points = nullptr);

// Evaluation context over the given receivers with the scenario's true
// perturbation statistics and paired tilt draws.
EvalContext make_eval_context(const ScenarioConfig& config,
                              const GroundPointSet& points);

// Full metric set for one configuration.
EvaluationReport evaluate_configuration(const ScenarioConfig& config,
                                        const std::string& method,
                                        const Eigen::VectorXcd& theta,
                                        const GroundPointSet& points);

}  // namespace risim
