#include "risim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "risim/rng.hpp"
#include "risim/units.hpp"

namespace risim {

using ordered_json = nlohmann::ordered_json;

double ScenarioConfig::wavelength() const {
  return kSpeedOfLight / frequency_hz;
}

double ScenarioConfig::element_spacing() const {
  return element_spacing_wavelengths * wavelength();
}

RisLayout ScenarioConfig::layout() const {
  return ris_element_layout(nx, ny, element_spacing());
}

ChannelParams ScenarioConfig::channel_params() const {
  ChannelParams p;
  p.beta0 = db_to_linear(beta0_db);
  p.noise_power = dbm_to_watts(noise_dbm);
  p.tx_power = dbm_to_watts(tx_power_dbm);
  p.wavelength = wavelength();
  return p;
}

PerturbationStats ScenarioConfig::perturbation() const {
  PerturbationStats s;
  s.sigma_x = deg_to_rad(perturb_sigma_deg[0]);
  s.sigma_y = deg_to_rad(perturb_sigma_deg[1]);
  s.sigma_z = deg_to_rad(perturb_sigma_deg[2]);
  s.mean_tilt = {deg_to_rad(mean_tilt_deg[0]), deg_to_rad(mean_tilt_deg[1]),
                 deg_to_rad(mean_tilt_deg[2])};
  return s;
}

Vec3 ScenarioConfig::ris_displacement() const {
  return drone_position - bs_position;
}

LinkAngles ScenarioConfig::angles_to_ris() const {
  return link_angles(Vec3{}, ris_displacement());
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base,
                                 const std::string& parameter, double value) {
  ScenarioConfig c = base;
  if (parameter == "sigma_deg") {
    c.perturb_sigma_deg = {value, value, value};
  } else if (parameter == "drone_altitude_m") {
    c.drone_position.z = value;
  } else if (parameter == "n_elements") {
    const int side = static_cast<int>(std::lround(std::sqrt(value)));
    if (side * side != static_cast<int>(std::lround(value)))
      throw std::invalid_argument(
          "sweep n_elements: value must be a perfect square");
    c.nx = side;
    c.ny = side;
  } else if (parameter == "area_radius_m") {
    auto* disk = std::get_if<UniformDisk>(&c.target.variant);
    if (disk == nullptr)
      throw std::invalid_argument(
          "sweep area_radius_m: target is not a uniform disk");
    disk->radius = value;
  } else {
    throw std::invalid_argument("unknown sweep parameter: " + parameter);
  }
  validate_config(c);
  return c;
}

void validate_config(const ScenarioConfig& c) {
  const auto positive = [](double v, const char* field) {
    if (!(v > 0.0))
      throw std::invalid_argument(std::string(field) + " must be > 0");
  };
  if (c.m_antennas < 1) throw std::invalid_argument("m_antennas must be >= 1");
  if (c.nx < 1) throw std::invalid_argument("nx must be >= 1");
  if (c.ny < 1) throw std::invalid_argument("ny must be >= 1");
  positive(dbm_to_watts(c.tx_power_dbm), "tx_power_dbm");
  if (!std::isfinite(c.tx_power_dbm))
    throw std::invalid_argument("tx_power_dbm must be finite");
  if (!std::isfinite(c.noise_dbm))
    throw std::invalid_argument("noise_dbm must be finite");
  if (!std::isfinite(c.beta0_db))
    throw std::invalid_argument("beta0_db must be finite");
  positive(c.frequency_hz, "frequency_hz");
  positive(c.element_spacing_wavelengths, "element_spacing_wavelengths");
  for (double s : c.perturb_sigma_deg)
    if (s < 0.0) throw std::invalid_argument("perturb.sigma_deg must be >= 0");
  validate_target_spec(c.target);
  if (c.n_w < 1) throw std::invalid_argument("n_w must be >= 1");
  if (c.n_mc < 1) throw std::invalid_argument("n_mc must be >= 1");
  if (c.n_realizations < 1)
    throw std::invalid_argument("n_realizations must be >= 1");
  if (c.randomization_candidates < 1)
    throw std::invalid_argument("randomization_candidates must be >= 1");
  if (!(c.solver.tol > 0.0)) throw std::invalid_argument("solver.tol must be > 0");
  if (!(c.solver.feas_tol > 0.0))
    throw std::invalid_argument("solver.feas_tol must be > 0");
  if (c.solver.max_iter < 1)
    throw std::invalid_argument("solver.max_iter must be >= 1");
  if (c.drone_position.z <= c.bs_position.z &&
      (c.drone_position - c.bs_position).norm() == 0.0)
    throw std::invalid_argument("drone_position must differ from bs_position");
}

namespace {

Vec3 vec3_from(const ordered_json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(field + " must be an array of 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::array<double, 3> triple_from(const ordered_json& j,
                                  const std::string& field) {
  if (j.is_number())
    return {j.get<double>(), j.get<double>(), j.get<double>()};
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(field + " must be a number or array of 3");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

TargetSpec target_from(const ordered_json& j) {
  TargetSpec spec;
  const std::string type = j.value("type", "uniform_disk");
  if (type == "uniform_disk") {
    UniformDisk disk;
    if (j.contains("center")) disk.center = vec3_from(j["center"], "target.center");
    else disk.center = {50.0, 20.0, 0.0};
    disk.radius = j.value("radius_m", 20.0);
    spec.variant = disk;
  } else if (type == "gaussian_mixture") {
    GaussianMixture mix;
    if (!j.contains("components"))
      throw std::invalid_argument("target.components is required for gaussian_mixture");
    for (const auto& cj : j["components"]) {
      GaussianComponent c;
      if (!cj.contains("mean_xy") || !cj["mean_xy"].is_array() ||
          cj["mean_xy"].size() != 2)
        throw std::invalid_argument("target.components[].mean_xy must be [x, y]");
      c.mean_x = cj["mean_xy"][0].get<double>();
      c.mean_y = cj["mean_xy"][1].get<double>();
      c.sigma = cj.value("sigma_m", 0.0);
      c.weight = cj.value("weight", 1.0 / j["components"].size());
      mix.components.push_back(c);
    }
    spec.variant = mix;
  } else {
    throw std::invalid_argument("target.type must be uniform_disk or gaussian_mixture");
  }
  return spec;
}

ordered_json target_to(const TargetSpec& spec) {
  ordered_json j;
  if (const auto* disk = std::get_if<UniformDisk>(&spec.variant)) {
    j["type"] = "uniform_disk";
    j["center"] = {disk->center.x, disk->center.y, disk->center.z};
    j["radius_m"] = disk->radius;
  } else {
    const auto& mix = std::get<GaussianMixture>(spec.variant);
    j["type"] = "gaussian_mixture";
    j["components"] = ordered_json::array();
    for (const auto& c : mix.components)
      j["components"].push_back(ordered_json{{"mean_xy", {c.mean_x, c.mean_y}},
                                             {"sigma_m", c.sigma},
                                             {"weight", c.weight}});
  }
  return j;
}

}  // namespace

ScenarioConfig scenario_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("config root must be a JSON object");

  ScenarioConfig c;
  if (j.contains("bs_position")) c.bs_position = vec3_from(j["bs_position"], "bs_position");
  if (j.contains("drone_position"))
    c.drone_position = vec3_from(j["drone_position"], "drone_position");
  c.m_antennas = j.value("m_antennas", c.m_antennas);
  c.nx = j.value("nx", c.nx);
  c.ny = j.value("ny", c.ny);
  c.tx_power_dbm = j.value("tx_power_dbm", c.tx_power_dbm);
  c.noise_dbm = j.value("noise_dbm", c.noise_dbm);
  c.beta0_db = j.value("beta0_db", c.beta0_db);
  c.frequency_hz = j.value("frequency_hz", c.frequency_hz);
  c.element_spacing_wavelengths =
      j.value("element_spacing_wavelengths", c.element_spacing_wavelengths);
  if (j.contains("perturb")) {
    const auto& p = j["perturb"];
    if (p.contains("sigma_deg"))
      c.perturb_sigma_deg = triple_from(p["sigma_deg"], "perturb.sigma_deg");
    if (p.contains("mean_tilt_deg"))
      c.mean_tilt_deg = triple_from(p["mean_tilt_deg"], "perturb.mean_tilt_deg");
  }
  if (j.contains("target")) c.target = target_from(j["target"]);
  c.n_w = j.value("n_w", c.n_w);
  c.n_mc = j.value("n_mc", c.n_mc);
  c.n_realizations = j.value("n_realizations", c.n_realizations);
  c.randomization_candidates =
      j.value("randomization_candidates", c.randomization_candidates);
  if (j.contains("seeds")) {
    const auto& s = j["seeds"];
    c.seeds.sampling = s.value("sampling", c.seeds.sampling);
    c.seeds.perturbation = s.value("perturbation", c.seeds.perturbation);
    c.seeds.randomization = s.value("randomization", c.seeds.randomization);
  }
  if (j.contains("solver")) {
    const auto& s = j["solver"];
    c.solver.tol = s.value("tol", c.solver.tol);
    c.solver.feas_tol = s.value("feas_tol", c.solver.feas_tol);
    c.solver.max_iter = s.value("max_iter", c.solver.max_iter);
  }
  validate_config(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str());
}

std::string scenario_to_json_text(const ScenarioConfig& c) {
  ordered_json j;
  j["bs_position"] = {c.bs_position.x, c.bs_position.y, c.bs_position.z};
  j["drone_position"] = {c.drone_position.x, c.drone_position.y,
                         c.drone_position.z};
  j["m_antennas"] = c.m_antennas;
  j["nx"] = c.nx;
  j["ny"] = c.ny;
  j["tx_power_dbm"] = c.tx_power_dbm;
  j["noise_dbm"] = c.noise_dbm;
  j["beta0_db"] = c.beta0_db;
  j["frequency_hz"] = c.frequency_hz;
  j["element_spacing_wavelengths"] = c.element_spacing_wavelengths;
  j["perturb"] = ordered_json{{"sigma_deg", c.perturb_sigma_deg},
                              {"mean_tilt_deg", c.mean_tilt_deg}};
  j["target"] = target_to(c.target);
  j["n_w"] = c.n_w;
  j["n_mc"] = c.n_mc;
  j["n_realizations"] = c.n_realizations;
  j["randomization_candidates"] = c.randomization_candidates;
  j["seeds"] = ordered_json{{"sampling", c.seeds.sampling},
                            {"perturbation", c.seeds.perturbation},
                            {"randomization", c.seeds.randomization}};
  j["solver"] = ordered_json{{"tol", c.solver.tol},
                             {"feas_tol", c.solver.feas_tol},
                             {"max_iter", c.solver.max_iter}};
  return j.dump(2);
}

SeedSet derive_seeds(std::uint64_t master) {
  SeedSet s;
  s.sampling = split_seed(master, 0);
  s.perturbation = split_seed(master, 1);
  s.randomization = split_seed(master, 2);
  return s;
}

}  // namespace risim
