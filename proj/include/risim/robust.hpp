#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "risim/channel.hpp"
#include "risim/geometry.hpp"

namespace risim {

// Direction-cosine differences between the departure and arrival directions.
// Each component lies in [-2, 2].
struct EtaCoefficients {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta3 = 0.0;
};

// How a RobustGainMatrix was produced.
struct GainMatrixProvenance {
  enum class Kind { deterministic, monte_carlo, closed_form };
  Kind kind = Kind::deterministic;
  int n_samples = 0;
  std::uint64_t seed = 0;
};

// Perturbation-averaged outer product E[a a^H] of the per-element compound
// phase terms a_i = exp(j(phi_i^T - phi_i^R)). Hermitian, unit diagonal,
// |entries| <= 1, positive semidefinite.
struct RobustGainMatrix {
  Eigen::MatrixXcd entries;
  GainMatrixProvenance provenance;

  int size() const { return static_cast<int>(entries.rows()); }
};

EtaCoefficients eta_coefficients(const LinkAngles& angles_r,
                                 const LinkAngles& angles_t);

// Variant for a platform with a known mean yaw psi_hat_z: the azimuths are
// measured against the rotated surface. eta3 is unchanged.
EtaCoefficients eta_coefficients_moving(const LinkAngles& angles_r,
                                        const LinkAngles& angles_t,
                                        double psi_hat_z);

// Phase gradient (f_x, f_y) of the compound phase phi^T - phi^R across the
// surface under tilt r. phase_difference(i, l) = f_x dx + f_y dy.
SpatialFrequency compound_spatial_frequency(const EtaCoefficients& eta,
                                            const EulerAngles& r,
                                            double wavelength);

// Compound phase difference between elements i and l under tilt r:
//   (2*pi/lambda) * [(eta1 cos(psi_z) + eta2 sin(psi_z)) cos(psi_y) + eta3 sin(psi_y)] dx
// + (2*pi/lambda) * [(eta2 cos(psi_z) - eta1 sin(psi_z)) cos(psi_x) + eta3 sin(psi_x)] dy
double phase_difference(const Element& elem_i, const Element& elem_l,
                        const EtaCoefficients& eta, const EulerAngles& r,
                        double wavelength);

// Same with a deterministic mean inclination on top of the random tilt.
// Equals phase_difference with the mean and random angles summed per axis
// (and the yaw absorbed into the eta coefficients).
double phase_difference_moving(const Element& elem_i, const Element& elem_l,
                               const EtaCoefficients& eta,
                               const EulerAngles& mean_tilt,
                               const EulerAngles& r, double wavelength);

// Sample mean of a(r) a(r)^H over n_samples Gaussian tilt draws. Positive
// semidefinite by construction; deterministic given seed. Honors a nonzero
// mean tilt in `perturb`.
RobustGainMatrix gain_matrix_mc(const EtaCoefficients& eta,
                                const RisLayout& layout,
                                const PerturbationStats& perturb,
                                double wavelength, int n_samples,
                                std::uint64_t seed);

// Gaussian-integral approximation of the expectation, valid for small
// per-axis sigma (a warning is emitted above 20 degrees). Exact for
// sigma = 0, where it degenerates to the deterministic rank-1 matrix.
// Throws for a nonzero mean tilt (use gain_matrix_mc there).
RobustGainMatrix gain_matrix_closed_form(const EtaCoefficients& eta,
                                         const RisLayout& layout,
                                         const PerturbationStats& perturb,
                                         double wavelength);

// Rank-1 zero-perturbation matrix a(0) a(0)^H.
RobustGainMatrix gain_matrix_deterministic(const EtaCoefficients& eta,
                                           const RisLayout& layout,
                                           double wavelength);

// Returns an empty string if the type invariants hold (Hermitian and unit
// diagonal to 1e-10, |entries| <= 1 + 1e-10, min eigenvalue >= -1e-8 * N),
// otherwise a description of the first violation.
std::string check_gain_matrix(const RobustGainMatrix& m);

}  // namespace risim
