#include "risim/geometry.hpp"

#include <stdexcept>

namespace risim {

Eigen::Matrix3d rotation_matrix(const EulerAngles& r) {
  const double cx = std::cos(r.psi_x), sx = std::sin(r.psi_x);
  const double cy = std::cos(r.psi_y), sy = std::sin(r.psi_y);
  const double cz = std::cos(r.psi_z), sz = std::sin(r.psi_z);

  Eigen::Matrix3d rx;
  rx << 1, 0, 0,
        0, cx, -sx,
        0, sx, cx;
  Eigen::Matrix3d ry;
  ry << cy, 0, sy,
        0, 1, 0,
        -sy, 0, cy;
  Eigen::Matrix3d rz;
  rz << cz, -sz, 0,
        sz, cz, 0,
        0, 0, 1;
  return rx * ry * rz;
}

RisLayout ris_element_layout(int n_x, int n_y, double spacing) {
  if (n_x < 1 || n_y < 1)
    throw std::invalid_argument("ris_element_layout: dimensions must be >= 1");
  if (!(spacing > 0.0))
    throw std::invalid_argument("ris_element_layout: spacing must be > 0");

  RisLayout layout;
  layout.n_x = n_x;
  layout.n_y = n_y;
  layout.spacing = spacing;
  layout.elements.reserve(static_cast<std::size_t>(n_x) * n_y);
  for (int n = 0; n < n_y; ++n)
    for (int m = 0; m < n_x; ++m)
      layout.elements.push_back({m * spacing, n * spacing});
  return layout;
}

LinkAngles link_angles(const Vec3& origin, const Vec3& target) {
  const Vec3 d = target - origin;
  const double len = d.norm();
  if (!(len > 0.0))
    throw std::invalid_argument("link_angles: origin and target coincide");

  LinkAngles a;
  a.elevation = std::asin(d.z / len);
  a.azimuth = (d.x == 0.0 && d.y == 0.0) ? 0.0 : std::atan2(d.y, d.x);
  if (a.azimuth <= -M_PI) a.azimuth = M_PI;
  return a;
}

namespace {

SpatialFrequency tilted_frequency(const LinkAngles& angles,
                                  const EulerAngles& r, double wavelength) {
  const double k = 2.0 * M_PI / wavelength;
  const double ce = std::cos(angles.elevation);
  const double se = std::sin(angles.elevation);
  SpatialFrequency v;
  v.f_x = k * (ce * std::cos(angles.azimuth - r.psi_z) * std::cos(r.psi_y) +
               se * std::sin(r.psi_y));
  v.f_y = k * (ce * std::sin(angles.azimuth - r.psi_z) * std::cos(r.psi_x) +
               se * std::sin(r.psi_x));
  return v;
}

}  // namespace

SpatialFrequency incident_spatial_frequency(const LinkAngles& angles,
                                            const EulerAngles& r,
                                            double wavelength) {
  if (!(wavelength > 0.0))
    throw std::invalid_argument("incident_spatial_frequency: wavelength must be > 0");
  return tilted_frequency(angles, r, wavelength);
}

SpatialFrequency departure_spatial_frequency(const LinkAngles& angles,
                                             const EulerAngles& r,
                                             double wavelength) {
  if (!(wavelength > 0.0))
    throw std::invalid_argument("departure_spatial_frequency: wavelength must be > 0");
  return tilted_frequency(angles, r, wavelength);
}

}  // namespace risim
