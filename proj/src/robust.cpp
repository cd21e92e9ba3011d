#include "risim/robust.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "risim/rng.hpp"
#include "risim/units.hpp"

namespace risim {

EtaCoefficients eta_coefficients(const LinkAngles& angles_r,
                                 const LinkAngles& angles_t) {
  const double ct = std::cos(angles_t.elevation);
  const double cr = std::cos(angles_r.elevation);
  EtaCoefficients eta;
  eta.eta1 = ct * std::cos(angles_t.azimuth) - cr * std::cos(angles_r.azimuth);
  eta.eta2 = ct * std::sin(angles_t.azimuth) - cr * std::sin(angles_r.azimuth);
  eta.eta3 = std::sin(angles_t.elevation) - std::sin(angles_r.elevation);
  return eta;
}

EtaCoefficients eta_coefficients_moving(const LinkAngles& angles_r,
                                        const LinkAngles& angles_t,
                                        double psi_hat_z) {
  const double ct = std::cos(angles_t.elevation);
  const double cr = std::cos(angles_r.elevation);
  EtaCoefficients eta;
  eta.eta1 = ct * std::cos(angles_t.azimuth - psi_hat_z) -
             cr * std::cos(angles_r.azimuth - psi_hat_z);
  eta.eta2 = ct * std::sin(angles_t.azimuth - psi_hat_z) -
             cr * std::sin(angles_r.azimuth - psi_hat_z);
  eta.eta3 = std::sin(angles_t.elevation) - std::sin(angles_r.elevation);
  return eta;
}

SpatialFrequency compound_spatial_frequency(const EtaCoefficients& eta,
                                            const EulerAngles& r,
                                            double wavelength) {
  const double k = 2.0 * M_PI / wavelength;
  const double cx = std::cos(r.psi_x), sx = std::sin(r.psi_x);
  const double cy = std::cos(r.psi_y), sy = std::sin(r.psi_y);
  const double cz = std::cos(r.psi_z), sz = std::sin(r.psi_z);
  SpatialFrequency v;
  v.f_x = k * ((eta.eta1 * cz + eta.eta2 * sz) * cy + eta.eta3 * sy);
  v.f_y = k * ((eta.eta2 * cz - eta.eta1 * sz) * cx + eta.eta3 * sx);
  return v;
}

double phase_difference(const Element& elem_i, const Element& elem_l,
                        const EtaCoefficients& eta, const EulerAngles& r,
                        double wavelength) {
  const SpatialFrequency v = compound_spatial_frequency(eta, r, wavelength);
  return v.f_x * (elem_i.x - elem_l.x) + v.f_y * (elem_i.y - elem_l.y);
}

double phase_difference_moving(const Element& elem_i, const Element& elem_l,
                               const EtaCoefficients& eta,
                               const EulerAngles& mean_tilt,
                               const EulerAngles& r, double wavelength) {
  const double k = 2.0 * M_PI / wavelength;
  // yaw mean rotates the eta coefficients in the surface plane
  const double chz = std::cos(mean_tilt.psi_z), shz = std::sin(mean_tilt.psi_z);
  const double e1 = eta.eta1 * chz + eta.eta2 * shz;
  const double e2 = eta.eta2 * chz - eta.eta1 * shz;
  const double e3 = eta.eta3;

  const double cx = std::cos(r.psi_x), sx = std::sin(r.psi_x);
  const double cy = std::cos(r.psi_y), sy = std::sin(r.psi_y);
  const double cz = std::cos(r.psi_z), sz = std::sin(r.psi_z);
  const double chx = std::cos(mean_tilt.psi_x), shx = std::sin(mean_tilt.psi_x);
  const double chy = std::cos(mean_tilt.psi_y), shy = std::sin(mean_tilt.psi_y);

  const double coef_x = (e1 * chy * cz + e2 * chy * sz + e3 * shy) * cy -
                        (e1 * shy * cz + e2 * shy * sz - e3 * chy) * sy;
  const double coef_y = (e2 * chx * cz - e1 * chx * sz + e3 * shx) * cx -
                        (e2 * shx * cz - e1 * shx * sz - e3 * chx) * sx;

  return k * coef_x * (elem_i.x - elem_l.x) +
         k * coef_y * (elem_i.y - elem_l.y);
}

namespace {

// Per-draw compound response vector a_i = exp(j phi_tilde_i).
Eigen::VectorXcd compound_response(const EtaCoefficients& eta,
                                   const RisLayout& layout,
                                   const EulerAngles& r, double wavelength) {
  const SpatialFrequency v = compound_spatial_frequency(eta, r, wavelength);
  Eigen::VectorXcd a(layout.size());
  for (int i = 0; i < layout.size(); ++i)
    a(i) = std::polar(1.0, element_phase(v, layout.elements[i]));
  return a;
}

}  // namespace

RobustGainMatrix gain_matrix_mc(const EtaCoefficients& eta,
                                const RisLayout& layout,
                                const PerturbationStats& perturb,
                                double wavelength, int n_samples,
                                std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("gain_matrix_mc: n_samples must be >= 1");

  const int n = layout.size();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    EulerAngles r{perturb.mean_tilt.psi_x + perturb.sigma_x * rng.gaussian(),
                  perturb.mean_tilt.psi_y + perturb.sigma_y * rng.gaussian(),
                  perturb.mean_tilt.psi_z + perturb.sigma_z * rng.gaussian()};
    const Eigen::VectorXcd a = compound_response(eta, layout, r, wavelength);
    acc.selfadjointView<Eigen::Lower>().rankUpdate(a, 1.0);
  }

  RobustGainMatrix out;
  out.entries = Eigen::MatrixXcd(acc.selfadjointView<Eigen::Lower>()) /
                static_cast<double>(n_samples);
  out.provenance = {GainMatrixProvenance::Kind::monte_carlo, n_samples, seed};
  return out;
}

RobustGainMatrix gain_matrix_deterministic(const EtaCoefficients& eta,
                                           const RisLayout& layout,
                                           double wavelength) {
  const Eigen::VectorXcd a =
      compound_response(eta, layout, EulerAngles{}, wavelength);
  RobustGainMatrix out;
  out.entries = a * a.adjoint();
  out.provenance = {GainMatrixProvenance::Kind::deterministic, 0, 0};
  return out;
}

namespace {

// Gaussian average of exp(j(-a psi^2 / 2 + b psi)) for psi ~ N(0, sigma^2):
//   (1 + j a sigma^2)^{-1/2} exp(-b^2 sigma^2 / (2 (1 + j a sigma^2)))
std::complex<double> axis_factor(double a, double b, double sigma) {
  const double s2 = sigma * sigma;
  const std::complex<double> den(1.0, a * s2);
  return std::exp(-(b * b * s2) / (2.0 * den)) / std::sqrt(den);
}

}  // namespace

RobustGainMatrix gain_matrix_closed_form(const EtaCoefficients& eta,
                                         const RisLayout& layout,
                                         const PerturbationStats& perturb,
                                         double wavelength) {
  if (perturb.has_mean_tilt())
    throw std::invalid_argument(
        "gain_matrix_closed_form: mean tilt not supported, use gain_matrix_mc");
  if (perturb.is_zero())
    return gain_matrix_deterministic(eta, layout, wavelength);

  const double warn_limit = deg_to_rad(20.0);
  if (perturb.sigma_x > warn_limit || perturb.sigma_y > warn_limit ||
      perturb.sigma_z > warn_limit)
    std::cerr << "gain_matrix_closed_form: sigma above 20 deg, "
                 "small-angle approximation degrades\n";

  const double k = 2.0 * M_PI / wavelength;
  const int n = layout.size();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (int l = 0; l < i; ++l) {
      const double dx = layout.elements[i].x - layout.elements[l].x;
      const double dy = layout.elements[i].y - layout.elements[l].y;
      const std::complex<double> lead =
          std::polar(1.0, k * (eta.eta1 * dx + eta.eta2 * dy));
      const std::complex<double> fx =
          axis_factor(k * eta.eta2 * dy, k * eta.eta3 * dy, perturb.sigma_x);
      const std::complex<double> fy =
          axis_factor(k * eta.eta1 * dx, k * eta.eta3 * dx, perturb.sigma_y);
      const std::complex<double> fz =
          axis_factor(k * (eta.eta1 * dx + eta.eta2 * dy),
                      k * (eta.eta2 * dx - eta.eta1 * dy), perturb.sigma_z);
      m(i, l) = lead * fx * fy * fz;
      m(l, i) = std::conj(m(i, l));
    }
  }

  RobustGainMatrix out;
  out.entries = std::move(m);
  out.provenance = {GainMatrixProvenance::Kind::closed_form, 0, 0};
  return out;
}

std::string check_gain_matrix(const RobustGainMatrix& m) {
  const int n = m.size();
  const auto& a = m.entries;
  std::ostringstream err;
  for (int i = 0; i < n; ++i) {
    if (std::abs(a(i, i) - 1.0) > 1e-10) {
      err << "diagonal entry " << i << " deviates from 1 by "
          << std::abs(a(i, i) - 1.0);
      return err.str();
    }
    for (int l = 0; l < n; ++l) {
      if (std::abs(a(i, l) - std::conj(a(l, i))) > 1e-10) {
        err << "entry (" << i << "," << l << ") breaks Hermitian symmetry";
        return err.str();
      }
      if (std::abs(a(i, l)) > 1.0 + 1e-10) {
        err << "entry (" << i << "," << l << ") has modulus "
            << std::abs(a(i, l));
        return err.str();
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-8 * n) {
    err << "minimum eigenvalue " << es.eigenvalues()(0) << " below -1e-8*N";
    return err.str();
  }
  return {};
}

}  // namespace risim
