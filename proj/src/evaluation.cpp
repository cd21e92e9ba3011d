#include "risim/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "risim/rng.hpp"
#include "risim/units.hpp"

namespace risim {

namespace {

std::vector<EulerAngles> draw_tilts(const PerturbationStats& p, int n,
                                    std::uint64_t seed) {
  // Standard normals scaled by sigma, so runs at different sigma levels with
  // the same seed stay coupled draw-by-draw.
  std::vector<EulerAngles> tilts(n);
  Rng rng(seed);
  for (auto& t : tilts) {
    t.psi_x = p.mean_tilt.psi_x + p.sigma_x * rng.gaussian();
    t.psi_y = p.mean_tilt.psi_y + p.sigma_y * rng.gaussian();
    t.psi_z = p.mean_tilt.psi_z + p.sigma_z * rng.gaussian();
  }
  return tilts;
}

// instantaneous SNR for every point under one tilt draw, reusing the
// tilt-dependent receive response
std::vector<double> snr_per_point(const EvalContext& ctx,
                                  const Eigen::VectorXcd& theta,
                                  const EulerAngles& r) {
  std::vector<double> out(ctx.points.size());
  for (std::size_t j = 0; j < ctx.points.size(); ++j)
    out[j] = instantaneous_snr(ctx.q, ctx.points[j], r, theta, ctx.precoder,
                               ctx.params, ctx.layout);
  return out;
}

}  // namespace

std::vector<double> per_point_expected_snr(const EvalContext& ctx,
                                           const Eigen::VectorXcd& theta) {
  if (ctx.points.empty())
    throw std::invalid_argument("per_point_expected_snr: no evaluation points");
  const auto tilts = draw_tilts(ctx.perturb, ctx.n_mc, ctx.seed);
  std::vector<double> acc(ctx.points.size(), 0.0);
  for (const auto& r : tilts) {
    const auto snrs = snr_per_point(ctx, theta, r);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += snrs[j];
  }
  for (double& a : acc) a = linear_to_db(a / ctx.n_mc);
  return acc;
}

double min_expected_snr(const EvalContext& ctx, const Eigen::VectorXcd& theta) {
  const auto per_point = per_point_expected_snr(ctx, theta);
  return *std::min_element(per_point.begin(), per_point.end());
}

std::vector<CdfPoint> snr_cdf(const EvalContext& ctx,
                              const Eigen::VectorXcd& theta) {
  if (ctx.n_realizations < 1)
    throw std::invalid_argument("snr_cdf: n_realizations must be >= 1");
  const auto tilts = draw_tilts(ctx.perturb, ctx.n_realizations, ctx.seed);
  std::vector<double> samples;
  samples.reserve(tilts.size() * ctx.points.size());
  for (const auto& r : tilts)
    for (double s : snr_per_point(ctx, theta, r)) samples.push_back(s);
  std::sort(samples.begin(), samples.end());

  std::vector<CdfPoint> cdf(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    cdf[i] = {linear_to_db(samples[i]), (i + 1) / n};
  return cdf;
}

double multicast_rate(const EvalContext& ctx, const Eigen::VectorXcd& theta) {
  const auto tilts = draw_tilts(ctx.perturb, ctx.n_realizations, ctx.seed);
  double acc = 0.0;
  for (const auto& r : tilts) {
    const auto snrs = snr_per_point(ctx, theta, r);
    const double worst = *std::min_element(snrs.begin(), snrs.end());
    acc += std::log2(1.0 + worst);
  }
  return acc / tilts.size();
}

PatternSlice radiation_pattern(const Eigen::VectorXcd& theta,
                               const RisLayout& layout, const Vec3& q,
                               const LinkAngles& center, PatternAxis axis,
                               const std::vector<double>& grid,
                               double wavelength) {
  if (grid.empty())
    throw std::invalid_argument("radiation_pattern: empty angle grid");

  const Eigen::VectorXcd a_r =
      ris_rx_array_response(q, EulerAngles{}, layout, wavelength);
  const Eigen::VectorXcd weighted = a_r.cwiseProduct(theta);

  PatternSlice slice;
  slice.axis = axis;
  slice.angles = grid;
  slice.gain_db.reserve(grid.size());
  for (double angle : grid) {
    LinkAngles dir = center;
    if (axis == PatternAxis::azimuth)
      dir.azimuth = angle;
    else
      dir.elevation = angle;
    const SpatialFrequency v =
        departure_spatial_frequency(dir, EulerAngles{}, wavelength);
    std::complex<double> sum{0.0, 0.0};
    for (int i = 0; i < layout.size(); ++i)
      sum += std::polar(1.0, element_phase(v, layout.elements[i])) * weighted(i);
    slice.gain_db.push_back(linear_to_db(std::max(std::norm(sum), 1e-300)));
  }
  return slice;
}

double pattern_peak_angle(const PatternSlice& slice) {
  const auto it = std::max_element(slice.gain_db.begin(), slice.gain_db.end());
  return slice.angles[std::distance(slice.gain_db.begin(), it)];
}

double pattern_beamwidth_3db(const PatternSlice& slice) {
  const auto it = std::max_element(slice.gain_db.begin(), slice.gain_db.end());
  const std::size_t peak = std::distance(slice.gain_db.begin(), it);
  const double level = *it - 3.0;

  double lo = slice.angles.front();
  for (std::size_t i = peak; i-- > 0;) {
    if (slice.gain_db[i] < level) {
      const double t = (level - slice.gain_db[i]) /
                       (slice.gain_db[i + 1] - slice.gain_db[i]);
      lo = slice.angles[i] + t * (slice.angles[i + 1] - slice.angles[i]);
      break;
    }
  }
  double hi = slice.angles.back();
  for (std::size_t i = peak + 1; i < slice.gain_db.size(); ++i) {
    if (slice.gain_db[i] < level) {
      const double t = (slice.gain_db[i - 1] - level) /
                       (slice.gain_db[i - 1] - slice.gain_db[i]);
      hi = slice.angles[i - 1] + t * (slice.angles[i] - slice.angles[i - 1]);
      break;
    }
  }
  return hi - lo;
}

}  // namespace risim
