#include "risim/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "risim/rng.hpp"

namespace risim {

void validate_target_spec(const TargetSpec& spec) {
  if (const auto* disk = std::get_if<UniformDisk>(&spec.variant)) {
    if (!(disk->radius > 0.0))
      throw std::invalid_argument("target.radius_m must be > 0");
    if (disk->center.z != 0.0)
      throw std::invalid_argument("target.center must lie on the ground plane (z = 0)");
    return;
  }
  const auto& mix = std::get<GaussianMixture>(spec.variant);
  if (mix.components.empty())
    throw std::invalid_argument("target.components must be nonempty");
  double total = 0.0;
  for (const auto& c : mix.components) {
    if (!(c.weight > 0.0))
      throw std::invalid_argument("target.components[].weight must be > 0");
    if (c.sigma < 0.0)
      throw std::invalid_argument("target.components[].sigma_m must be >= 0");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("target.components[].weight must sum to 1");
}

GroundPointSet sample_targets(const TargetSpec& spec, int n_w,
                              std::uint64_t seed) {
  if (n_w < 1) throw std::invalid_argument("sample_targets: n_w must be >= 1");
  validate_target_spec(spec);

  GroundPointSet out;
  out.seed = seed;
  out.points.reserve(n_w);
  Rng rng(seed);

  if (const auto* disk = std::get_if<UniformDisk>(&spec.variant)) {
    for (int i = 0; i < n_w; ++i) {
      const double rad = disk->radius * std::sqrt(rng.uniform());
      const double ang = 2.0 * M_PI * rng.uniform();
      out.points.push_back({disk->center.x + rad * std::cos(ang),
                            disk->center.y + rad * std::sin(ang), 0.0});
    }
    return out;
  }

  const auto& mix = std::get<GaussianMixture>(spec.variant);
  for (int i = 0; i < n_w; ++i) {
    const double u = rng.uniform();
    double cum = 0.0;
    const GaussianComponent* pick = &mix.components.back();
    for (const auto& c : mix.components) {
      cum += c.weight;
      if (u < cum) {
        pick = &c;
        break;
      }
    }
    out.points.push_back({pick->mean_x + pick->sigma * rng.gaussian(),
                          pick->mean_y + pick->sigma * rng.gaussian(), 0.0});
  }
  return out;
}

}  // namespace risim
