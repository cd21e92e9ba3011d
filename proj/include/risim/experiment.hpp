#pragma once

#include <iosfwd>
#include <string>

#include "risim/methods.hpp"
#include "risim/scenario.hpp"

namespace risim {

// Runs the sweep grid: every (value, instance, method) cell gets a JSON
// report and CDF CSV; summary.csv aggregates the scalar metrics and
// metadata.json records the resolved configuration. Solver failures are
// recorded in the affected cell and the run continues. Returns 0 when every
// cell succeeded, 1 otherwise.
int run_experiment(const ScenarioConfig& config, const SweepSpec& sweep,
                   const std::string& out_dir, const SolveOptions& opts = {},
                   std::ostream* log = nullptr);

// Angle/gain CSV of the configured method's pattern slice through the
// target-center direction, plus a metadata sidecar. Returns 0 on success.
int emit_pattern(const ScenarioConfig& config, const std::string& method,
                 PatternAxis axis, const std::string& out_path,
                 const SolveOptions& opts = {}, int grid_points = 721,
                 double half_span_deg = 90.0);

// Paired-seed comparison of two or more methods on one scenario; writes a
// delta table (CSV + JSON). Returns 0 on success.
int compare_methods(const ScenarioConfig& config,
                    const std::vector<std::string>& methods,
                    const std::string& out_dir, const SolveOptions& opts = {});

// Direction of the target-area center as seen from the platform.
LinkAngles target_center_angles(const ScenarioConfig& config);

}  // namespace risim
