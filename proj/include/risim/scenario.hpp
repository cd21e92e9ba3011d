#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "risim/channel.hpp"
#include "risim/geometry.hpp"
#include "risim/sampling.hpp"

namespace risim {

struct SeedSet {
  std::uint64_t sampling = 1;
  std::uint64_t perturbation = 2;
  std::uint64_t randomization = 3;
};

struct SolverSettings {
  double tol = 1e-4;
  double feas_tol = 1e-6;
  int max_iter = 5000;
};

// Full experiment description. Boundary units are dBm/dB/degrees/Hz; the
// accessors below convert to SI/radians/linear scale. Defaults reproduce the
// reference simulation settings.
struct ScenarioConfig {
  Vec3 bs_position{0.0, 0.0, 10.0};
  Vec3 drone_position{25.0, 25.0, 50.0};
  int m_antennas = 16;
  int nx = 10;
  int ny = 10;
  double tx_power_dbm = 24.0;
  double noise_dbm = -80.0;
  double beta0_db = -30.0;
  double frequency_hz = 30e9;
  double element_spacing_wavelengths = 0.5;

  std::array<double, 3> perturb_sigma_deg{20.0, 20.0, 20.0};
  std::array<double, 3> mean_tilt_deg{0.0, 0.0, 0.0};

  TargetSpec target{UniformDisk{{50.0, 20.0, 0.0}, 20.0}};

  int n_w = 200;
  int n_mc = 5000;
  int n_realizations = 5000;
  int randomization_candidates = 1000;

  SeedSet seeds;
  SolverSettings solver;

  // derived quantities, SI / radians / linear
  double wavelength() const;
  double element_spacing() const;
  RisLayout layout() const;
  ChannelParams channel_params() const;
  PerturbationStats perturbation() const;
  Vec3 ris_displacement() const;  // drone - bs
  LinkAngles angles_to_ris() const;
};

// Experiment grid: one swept parameter, evaluated for a set of methods.
struct SweepSpec {
  std::string parameter;  // sigma_deg | drone_altitude_m | n_elements | area_radius_m
  std::vector<double> values;
  std::vector<std::string> methods;  // rife | agnostic | fair_rife | fair_agnostic
  int instances = 1;  // receiver-placement instances averaged per cell
};

// Returns a copy of `base` with the swept parameter overridden. Throws on an
// unknown parameter name or invalid value.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base,
                                 const std::string& parameter, double value);

// Parse/serialize. Omitted fields keep their defaults; violations raise
// std::invalid_argument naming the field path.
ScenarioConfig scenario_from_json_text(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string scenario_to_json_text(const ScenarioConfig& config);

// Throws std::invalid_argument naming the offending field.
void validate_config(const ScenarioConfig& config);

// Master-seed split into the three named streams.
SeedSet derive_seeds(std::uint64_t master);

}  // namespace risim
