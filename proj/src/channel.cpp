#include "risim/channel.hpp"

#include <stdexcept>

#include "risim/rng.hpp"

namespace risim {

double path_gain_bs_ris(const Vec3& q, double beta0) {
  const double d2 = q.squared_norm();
  if (!(d2 > 0.0))
    throw std::invalid_argument("path_gain_bs_ris: zero distance");
  return beta0 / d2;
}

double path_gain_ris_target(const Vec3& q, const Vec3& w, double beta0) {
  const double d2 = (q - w).squared_norm();
  if (!(d2 > 0.0))
    throw std::invalid_argument("path_gain_ris_target: coincident points");
  return beta0 / d2;
}

Eigen::VectorXcd bs_array_response(const LinkAngles& angles_to_ris, int m,
                                   double wavelength) {
  if (m < 1) throw std::invalid_argument("bs_array_response: M must be >= 1");
  // direction cosine along the array axis
  const double u =
      std::cos(angles_to_ris.elevation) * std::cos(angles_to_ris.azimuth);
  const double step = 2.0 * M_PI / wavelength * (wavelength / 2.0) * u;
  Eigen::VectorXcd a(m);
  for (int i = 0; i < m; ++i) a(i) = std::polar(1.0, -step * i);
  return a;
}

Eigen::VectorXcd ris_rx_array_response(const Vec3& q, const EulerAngles& r,
                                       const RisLayout& layout,
                                       double wavelength) {
  const LinkAngles angles = link_angles(Vec3{}, q);
  const SpatialFrequency v = incident_spatial_frequency(angles, r, wavelength);
  Eigen::VectorXcd a(layout.size());
  for (int i = 0; i < layout.size(); ++i)
    a(i) = std::polar(1.0, -element_phase(v, layout.elements[i]));
  return a;
}

Eigen::VectorXcd ris_tx_array_response(const Vec3& q, const Vec3& w,
                                       const EulerAngles& r,
                                       const RisLayout& layout,
                                       double wavelength) {
  const LinkAngles angles = link_angles(q, w);
  const SpatialFrequency v =
      departure_spatial_frequency(angles, r, wavelength);
  Eigen::VectorXcd a(layout.size());
  for (int i = 0; i < layout.size(); ++i)
    a(i) = std::polar(1.0, -element_phase(v, layout.elements[i]));
  return a;
}

double instantaneous_snr(const Vec3& q, const Vec3& w, const EulerAngles& r,
                         const Eigen::VectorXcd& theta, const Precoder& v,
                         const ChannelParams& params, const RisLayout& layout) {
  const double d1_sq = q.squared_norm();
  const double d2_sq = (q - w).squared_norm();
  if (!(d2_sq > 0.0))
    throw std::invalid_argument("instantaneous_snr: coincident positions");

  const Eigen::VectorXcd a_r = ris_rx_array_response(q, r, layout, params.wavelength);
  const Eigen::VectorXcd a_t =
      ris_tx_array_response(q, w, r, layout, params.wavelength);
  // a_T^H diag(theta) a_R
  const std::complex<double> cascade =
      (a_t.conjugate().cwiseProduct(a_r).cwiseProduct(theta)).sum();

  const LinkAngles to_ris = link_angles(Vec3{}, q);
  const Eigen::VectorXcd a_bs =
      bs_array_response(to_ris, static_cast<int>(v.v.size()), params.wavelength);
  const std::complex<double> bs_gain = a_bs.dot(v.v);  // a_BS^H v

  const double num = std::norm(cascade) * std::norm(bs_gain) *
                     params.beta0 * params.beta0;
  return num / (d1_sq * d2_sq * params.noise_power);
}

double expected_snr(const Vec3& q, const Vec3& w,
                    const PerturbationStats& perturb,
                    const Eigen::VectorXcd& theta, const Precoder& v,
                    const ChannelParams& params, const RisLayout& layout,
                    int n_mc, std::uint64_t seed) {
  if (n_mc < 1) throw std::invalid_argument("expected_snr: n_mc must be >= 1");
  Rng rng(seed);
  double acc = 0.0;
  for (int s = 0; s < n_mc; ++s) {
    EulerAngles r{perturb.mean_tilt.psi_x + perturb.sigma_x * rng.gaussian(),
                  perturb.mean_tilt.psi_y + perturb.sigma_y * rng.gaussian(),
                  perturb.mean_tilt.psi_z + perturb.sigma_z * rng.gaussian()};
    acc += instantaneous_snr(q, w, r, theta, v, params, layout);
  }
  return acc / n_mc;
}

}  // namespace risim
