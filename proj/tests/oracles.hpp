// Independent reference computations used by the tests. These deliberately
// avoid the library's formula paths: phases come from explicit wave-vector /
// rotation-matrix projections and optima from exhaustive search.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "risim/geometry.hpp"
#include "risim/optimizer.hpp"

namespace oracles {

inline Eigen::Vector3d wave_vector(const risim::LinkAngles& a) {
  return {std::cos(a.elevation) * std::cos(a.azimuth),
          std::cos(a.elevation) * std::sin(a.azimuth),
          std::sin(a.elevation)};
}

// Element phase as the wave-vector projection (2*pi/lambda) k^T R c with the
// element kept in the surface plane. `pitch_sign` selects the sign convention
// of the y-axis rotation: the surface-tilt model treats positive pitch as
// raising the phase along +x, which for the right-handed elementary matrix
// corresponds to a negated angle.
inline double projected_phase(const risim::LinkAngles& angles,
                              const risim::EulerAngles& r,
                              const risim::Element& e, double wavelength,
                              double pitch_sign = -1.0) {
  const risim::EulerAngles adj{r.psi_x, pitch_sign * r.psi_y, r.psi_z};
  const Eigen::Matrix3d rot = risim::rotation_matrix(adj);
  const Eigen::Vector3d c(e.x, e.y, 0.0);
  return 2.0 * M_PI / wavelength * wave_vector(angles).dot(rot * c);
}

// Exhaustive max-min search over unit-modulus configurations with uniformly
// quantized phases. Only sensible for tiny n.
inline double grid_search_max_min(const risim::SdrProblem& problem,
                                  int levels) {
  const int n = problem.n;
  std::vector<int> idx(n, 0);
  Eigen::VectorXcd theta(n);
  double best = -1.0;
  while (true) {
    for (int i = 0; i < n; ++i)
      theta(i) = std::polar(1.0, 2.0 * M_PI * idx[i] / levels);
    best = std::max(best, risim::rank1_objective(problem, theta));
    int pos = 0;
    while (pos < n && ++idx[pos] == levels) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return best;
}

}  // namespace oracles
