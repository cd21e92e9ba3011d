#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "risim/channel.hpp"
#include "risim/geometry.hpp"

namespace risim {

struct CdfPoint {
  double snr_db = 0.0;
  double probability = 0.0;
};

struct EvaluationReport {
  std::string method;
  double min_expected_snr_db = 0.0;
  double multicast_rate_bps_hz = 0.0;
  std::vector<CdfPoint> snr_cdf;
  std::vector<double> per_point_expected_snr_db;
  int n_points = 0;
  int n_mc = 0;
  int n_realizations = 0;
  std::uint64_t perturbation_seed = 0;
};

// Everything the SNR metrics need, with positions relative to the
// transmitter. The same perturbation seed makes comparisons across methods
// paired (identical tilt draws).
struct EvalContext {
  Vec3 q;                    // platform displacement from the transmitter
  std::vector<Vec3> points;  // receiver displacements from the transmitter
  PerturbationStats perturb;
  ChannelParams params;
  RisLayout layout;
  Precoder precoder;
  int n_mc = 0;
  int n_realizations = 0;
  std::uint64_t seed = 0;
};

// Minimum over the points of the perturbation-averaged SNR, in dB. All
// points share one stream of tilt draws.
double min_expected_snr(const EvalContext& ctx, const Eigen::VectorXcd& theta);

// Expected SNR (dB) per point, same paired draws as min_expected_snr.
std::vector<double> per_point_expected_snr(const EvalContext& ctx,
                                           const Eigen::VectorXcd& theta);

// Empirical CDF over (point x tilt-draw) instantaneous SNRs.
std::vector<CdfPoint> snr_cdf(const EvalContext& ctx,
                              const Eigen::VectorXcd& theta);

// Average over tilt draws of log2(1 + worst-point instantaneous SNR).
double multicast_rate(const EvalContext& ctx, const Eigen::VectorXcd& theta);

enum class PatternAxis { azimuth, elevation };

struct PatternSlice {
  PatternAxis axis = PatternAxis::azimuth;
  std::vector<double> angles;   // radians, absolute
  std::vector<double> gain_db;  // |a_T^H diag(theta) a_R|^2 in dB
};

// Array gain swept along one angular axis through `center` with the surface
// untilted. q is the transmitter-relative platform displacement fixing the
// incident response.
PatternSlice radiation_pattern(const Eigen::VectorXcd& theta,
                               const RisLayout& layout, const Vec3& q,
                               const LinkAngles& center, PatternAxis axis,
                               const std::vector<double>& grid,
                               double wavelength);

// Angle of the pattern maximum, radians.
double pattern_peak_angle(const PatternSlice& slice);

// Width of the contiguous -3 dB region around the peak, radians, with linear
// interpolation at the crossings.
double pattern_beamwidth_3db(const PatternSlice& slice);

}  // namespace risim
