#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "risim/channel.hpp"
#include "risim/robust.hpp"
#include "risim/sampling.hpp"

namespace risim {

// Surface configuration: diagonal of the reflection matrix, |theta_i| <= 1.
struct RisConfiguration {
  Eigen::VectorXcd theta;
};

// Max-min instance: maximize min_i weights[i] * tr(gain_conj[i] * X) over
// X PSD with diag(X) <= 1. gain_conj holds the conjugated (still Hermitian
// PSD) gain matrices; weights are the 1/d2^2 scale factors.
struct SdrProblem {
  std::vector<Eigen::MatrixXcd> gain_conj;
  std::vector<double> weights;
  int n = 0;
};

struct SdrOptions {
  double tol = 1e-4;       // relative bisection gap
  double feas_tol = 1e-6;  // splitting residual for the feasibility subproblem
  int max_iter = 5000;     // projection iterations per feasibility subproblem
  std::ostream* log = nullptr;  // structured iteration records when set
};

struct SdrSolution {
  Eigen::MatrixXcd theta_bar;
  double achieved_min = 0.0;     // min_i weights[i] * tr(gain_conj[i] theta_bar)
  int iterations = 0;            // total projection iterations
  double primal_residual = 0.0;  // feasibility violation of theta_bar
  double dual_residual = 0.0;    // final bisection bracket width
};

// Thrown when the bisection cannot certify a solution within the iteration
// budget; carries the best feasible iterate found so far.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, SdrSolution best)
      : std::runtime_error(what), best_solution(std::move(best)) {}
  SdrSolution best_solution;
};

// v = sqrt(P / M) * a_BS: transmit power P exactly, |a_BS^H v|^2 = P * M.
Precoder mrt_precoder(const LinkAngles& angles_to_ris, int m, double power,
                      double wavelength);

// min_i weights[i] * Re(theta^H gain_conj[i] theta) for a rank-1 candidate.
double rank1_objective(const SdrProblem& problem,
                       const Eigen::VectorXcd& theta);

// min_i weights[i] * Re(tr(gain_conj[i] X)) for a lifted matrix.
double lifted_objective(const SdrProblem& problem, const Eigen::MatrixXcd& x);

// Bisection on the epigraph level combined with alternating projections onto
// the PSD cone and the affine constraints for each feasibility subproblem.
SdrSolution solve_sdr(const SdrProblem& problem, const SdrOptions& opts = {});

// Rank-1 extraction: candidates exp(j arg(xi)) with xi ~ CN(0, theta_bar),
// plus the unit-modulus projection of the dominant eigenvector. Returns the
// candidate with the best max-min objective (first best wins on ties).
RisConfiguration gaussian_randomization(const SdrSolution& solution,
                                        const SdrProblem& problem,
                                        int n_candidates, std::uint64_t seed);

}  // namespace risim
