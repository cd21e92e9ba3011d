#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "risim/geometry.hpp"

namespace risim {

// Link-budget constants, all linear scale / SI units.
struct ChannelParams {
  double beta0 = 0.0;        // power gain at 1 m reference distance
  double noise_power = 0.0;  // watts
  double tx_power = 0.0;     // watts
  double wavelength = 0.0;   // meters
};

// Transmit beamforming vector, length M, ||v||^2 <= power budget.
struct Precoder {
  Eigen::VectorXcd v;
};

// Perturbation statistics of the surface orientation: per-axis standard
// deviations in radians plus an optional deterministic mean inclination.
struct PerturbationStats {
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double sigma_z = 0.0;
  EulerAngles mean_tilt;  // zero for a hovering platform

  bool is_zero() const {
    return sigma_x == 0.0 && sigma_y == 0.0 && sigma_z == 0.0;
  }
  bool has_mean_tilt() const {
    return mean_tilt.psi_x != 0.0 || mean_tilt.psi_y != 0.0 ||
           mean_tilt.psi_z != 0.0;
  }
};

// beta0 / ||q||^2, q = displacement from the transmitter to the surface.
double path_gain_bs_ris(const Vec3& q, double beta0);

// beta0 / ||q - w||^2
double path_gain_ris_target(const Vec3& q, const Vec3& w, double beta0);

// Uniform linear array along the global x axis, lambda/2 spacing.
// Entries are unit modulus, ||a||^2 = M.
Eigen::VectorXcd bs_array_response(const LinkAngles& angles_to_ris, int m,
                                   double wavelength);

// Receive response [a_R]_i = exp(-j phi_i) for the wave arriving from the
// transmitter at displacement q, with surface tilt r.
Eigen::VectorXcd ris_rx_array_response(const Vec3& q, const EulerAngles& r,
                                       const RisLayout& layout,
                                       double wavelength);

// Transmit response towards the ground point w.
Eigen::VectorXcd ris_tx_array_response(const Vec3& q, const Vec3& w,
                                       const EulerAngles& r,
                                       const RisLayout& layout,
                                       double wavelength);

// Received SNR (linear scale) at w for surface configuration theta and
// precoder v:
//   |a_T^H diag(theta) a_R|^2 |a_BS^H v|^2 beta0^2 / (d1^2 d2^2 sigma_n^2)
// Positions are relative to the transmitter.
double instantaneous_snr(const Vec3& q, const Vec3& w, const EulerAngles& r,
                         const Eigen::VectorXcd& theta, const Precoder& v,
                         const ChannelParams& params, const RisLayout& layout);

// Sample mean of instantaneous_snr over n_mc draws r ~ N(mean_tilt,
// diag(sigma^2)). Deterministic given seed.
double expected_snr(const Vec3& q, const Vec3& w,
                    const PerturbationStats& perturb,
                    const Eigen::VectorXcd& theta, const Precoder& v,
                    const ChannelParams& params, const RisLayout& layout,
                    int n_mc, std::uint64_t seed);

}  // namespace risim
