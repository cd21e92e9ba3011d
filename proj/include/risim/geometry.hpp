#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace risim {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double squared_norm() const { return x * x + y * y + z * z; }
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}
inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Roll/pitch/yaw triple in radians. Doubles both as a random surface
// perturbation and as a deterministic mean inclination.
struct EulerAngles {
  double psi_x = 0.0;
  double psi_y = 0.0;
  double psi_z = 0.0;
};

// Azimuth in (-pi, pi], elevation in [-pi/2, pi/2], radians.
struct LinkAngles {
  double azimuth = 0.0;
  double elevation = 0.0;
};

// Phase gradient across the surface plane, radians per meter.
struct SpatialFrequency {
  double f_x = 0.0;
  double f_y = 0.0;
};

// Element coordinates in the surface-local frame (origin at the corner
// element, axes along the element rows/columns).
struct Element {
  double x = 0.0;
  double y = 0.0;
};

// Row-major rectangular element grid. elements[m + n_x * n] sits at
// (m * spacing, n * spacing).
struct RisLayout {
  int n_x = 0;
  int n_y = 0;
  double spacing = 0.0;  // meters
  std::vector<Element> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

// Proper rotation R_x(psi_x) * R_y(psi_y) * R_z(psi_z) applied to
// surface-local coordinates.
Eigen::Matrix3d rotation_matrix(const EulerAngles& r);

// Throws std::invalid_argument on non-positive dimensions or spacing.
RisLayout ris_element_layout(int n_x, int n_y, double spacing);

// Spherical angles of (target - origin). Throws on coincident points.
LinkAngles link_angles(const Vec3& origin, const Vec3& target);

// Phase gradient seen on the (possibly tilted) surface for a wave arriving
// from direction `angles`:
//   f_x = (2*pi/lambda) * [cos(el) cos(az - psi_z) cos(psi_y) + sin(el) sin(psi_y)]
//   f_y = (2*pi/lambda) * [cos(el) sin(az - psi_z) cos(psi_x) + sin(el) sin(psi_x)]
// The tilt enters per axis; cross-axis coupling is second order.
SpatialFrequency incident_spatial_frequency(const LinkAngles& angles,
                                            const EulerAngles& r,
                                            double wavelength);

// Same construction for the departure direction towards the target.
SpatialFrequency departure_spatial_frequency(const LinkAngles& angles,
                                             const EulerAngles& r,
                                             double wavelength);

inline double element_phase(const SpatialFrequency& v, const Element& e) {
  return v.f_x * e.x + v.f_y * e.y;
}

}  // namespace risim
