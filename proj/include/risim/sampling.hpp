#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "risim/geometry.hpp"

namespace risim {

// Receivers dropped uniformly over a ground disk.
struct UniformDisk {
  Vec3 center;     // z must be 0 (ground plane)
  double radius = 0.0;  // meters
};

// One isotropic bivariate normal blob on the ground.
struct GaussianComponent {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double sigma = 0.0;   // meters, same along x and y
  double weight = 0.0;  // positive, weights sum to 1
};

struct GaussianMixture {
  std::vector<GaussianComponent> components;
};

// Spatial distribution of the receivers on the ground plane.
struct TargetSpec {
  std::variant<UniformDisk, GaussianMixture> variant = UniformDisk{};
};

struct GroundPointSet {
  std::vector<Vec3> points;  // all with z = 0
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument naming the offending field.
void validate_target_spec(const TargetSpec& spec);

// n_w i.i.d. draws from the target distribution. Deterministic given seed.
// Disk sampling is area-uniform (radius via sqrt of a uniform variate).
GroundPointSet sample_targets(const TargetSpec& spec, int n_w,
                              std::uint64_t seed);

}  // namespace risim
