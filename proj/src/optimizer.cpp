#include "risim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "risim/rng.hpp"

namespace risim {

Precoder mrt_precoder(const LinkAngles& angles_to_ris, int m, double power,
                      double wavelength) {
  if (!(power > 0.0))
    throw std::invalid_argument("mrt_precoder: power must be > 0");
  Precoder p;
  p.v = std::sqrt(power / m) * bs_array_response(angles_to_ris, m, wavelength);
  return p;
}

namespace {

// real Frobenius inner product of Hermitian matrices, tr(A B)
double herm_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

void validate_problem(const SdrProblem& p) {
  if (p.gain_conj.empty())
    throw std::invalid_argument("solve_sdr: at least one gain matrix required");
  if (p.gain_conj.size() != p.weights.size())
    throw std::invalid_argument("solve_sdr: matrix/weight count mismatch");
  for (const auto& m : p.gain_conj)
    if (m.rows() != p.n || m.cols() != p.n)
      throw std::invalid_argument("solve_sdr: matrix dimension mismatch");
  for (double w : p.weights)
    if (!(w > 0.0)) throw std::invalid_argument("solve_sdr: weights must be > 0");
}

struct FeasibilityOutcome {
  bool feasible = false;
  bool certified = true;  // false when the iteration cap hit without a verdict
  Eigen::MatrixXcd witness;
  int iterations = 0;
  double violation = 0.0;
};

// Find X with X PSD, diag(X) <= 1, weights[i] tr(B_i X) >= t, by cyclic
// projections: a few cheap passes over the half-spaces and the diagonal box,
// then a projection onto the PSD cone. The PSD iterate is the certificate.
FeasibilityOutcome find_feasible(const SdrProblem& p,
                                 const std::vector<double>& fro_sq, double t,
                                 Eigen::MatrixXcd x, const SdrOptions& opts) {
  const int n = p.n;
  const int n_c = static_cast<int>(p.gain_conj.size());
  const int poly_passes = 4;
  const int stall_window = 120;

  FeasibilityOutcome out;
  double best_viol = std::numeric_limits<double>::infinity();
  int best_iter = 0;

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    for (int pass = 0; pass < poly_passes; ++pass) {
      for (int i = 0; i < n_c; ++i) {
        const double tau = t / p.weights[i];
        const double gap = tau - herm_inner(p.gain_conj[i], x);
        if (gap > 0.0) x += (gap / fro_sq[i]) * p.gain_conj[i];
      }
      for (int d = 0; d < n; ++d) {
        const double re = x(d, d).real();
        x(d, d) = std::complex<double>(std::min(re, 1.0), 0.0);
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x);
    const auto& vals = es.eigenvalues();
    Eigen::VectorXd clipped = vals.cwiseMax(0.0);
    x = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    out.iterations = iter;

    // violation of the affine constraints at the PSD-certified iterate
    double viol = 0.0;
    for (int i = 0; i < n_c; ++i) {
      const double tau = t / p.weights[i];
      const double rel =
          (tau - herm_inner(p.gain_conj[i], x)) / std::max(std::abs(tau), 1.0);
      viol = std::max(viol, rel);
    }
    for (int d = 0; d < n; ++d)
      viol = std::max(viol, x(d, d).real() - 1.0);

    if (viol <= opts.feas_tol) {
      out.feasible = true;
      out.witness = std::move(x);
      out.violation = viol;
      return out;
    }
    if (viol < best_viol * (1.0 - 1e-4)) {
      best_viol = viol;
      best_iter = iter;
    }
    if (iter - best_iter > stall_window && viol > 10.0 * opts.feas_tol) {
      out.violation = viol;  // plateaued away from the constraint set
      return out;
    }
  }
  out.certified = false;
  out.violation = best_viol;
  return out;
}

double max_eigenvalue_estimate(const Eigen::MatrixXcd& m) {
  // power iteration; loose is fine, only used to shrink the bisection bracket
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m.rows()).normalized();
  double lam = 0.0;
  for (int k = 0; k < 30; ++k) {
    v = (m * v).eval();
    lam = v.norm();
    if (lam == 0.0) return 0.0;
    v /= lam;
  }
  return lam;
}

}  // namespace

double lifted_objective(const SdrProblem& problem, const Eigen::MatrixXcd& x) {
  double obj = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.gain_conj.size(); ++i)
    obj = std::min(obj, problem.weights[i] * herm_inner(problem.gain_conj[i], x));
  return obj;
}

double rank1_objective(const SdrProblem& problem,
                       const Eigen::VectorXcd& theta) {
  double obj = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.gain_conj.size(); ++i) {
    const double q = theta.dot(problem.gain_conj[i] * theta).real();
    obj = std::min(obj, problem.weights[i] * q);
  }
  return obj;
}

SdrSolution solve_sdr(const SdrProblem& problem, const SdrOptions& opts) {
  validate_problem(problem);
  const int n = problem.n;
  const int n_c = static_cast<int>(problem.gain_conj.size());

  std::vector<double> fro_sq(n_c);
  for (int i = 0; i < n_c; ++i)
    fro_sq[i] = problem.gain_conj[i].squaredNorm();

  // Feasible start: convex combination of the gain matrices with weights
  // favoring the weakest (most distant) constraints. Unit diagonal and PSD.
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
  double coef_sum = 0.0;
  for (int i = 0; i < n_c; ++i) coef_sum += 1.0 / problem.weights[i];
  for (int i = 0; i < n_c; ++i)
    x += (1.0 / problem.weights[i] / coef_sum) * problem.gain_conj[i];

  SdrSolution sol;
  sol.theta_bar = x;
  double t_lo = lifted_objective(problem, x);

  double t_hi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_c; ++i) {
    const double cap =
        std::min(static_cast<double>(n) * n,
                 max_eigenvalue_estimate(problem.gain_conj[i]) * n * 1.0001);
    t_hi = std::min(t_hi, problem.weights[i] * cap);
  }
  t_hi = std::max(t_hi, t_lo);

  int uncertified = 0;
  int outer = 0;
  while (t_hi - t_lo > opts.tol * std::max(t_hi, 1e-12)) {
    ++outer;
    const double t_mid = 0.5 * (t_lo + t_hi);
    FeasibilityOutcome fo =
        find_feasible(problem, fro_sq, t_mid, sol.theta_bar, opts);
    sol.iterations += fo.iterations;
    if (!fo.certified) ++uncertified;

    if (fo.feasible) {
      sol.theta_bar = std::move(fo.witness);
      t_lo = std::max(t_lo, lifted_objective(problem, sol.theta_bar));
      sol.primal_residual = fo.violation;
    } else {
      t_hi = t_mid;
    }
    if (opts.log)
      *opts.log << "solve_sdr iter=" << outer << " t_lo=" << t_lo
                << " t_hi=" << t_hi << " feasible=" << fo.feasible
                << " inner=" << fo.iterations << " violation=" << fo.violation
                << '\n';
  }

  // exact diagonal feasibility: scale down if any entry crept above 1
  double max_diag = 0.0;
  for (int d = 0; d < n; ++d)
    max_diag = std::max(max_diag, sol.theta_bar(d, d).real());
  if (max_diag > 1.0) sol.theta_bar /= max_diag;

  sol.achieved_min = lifted_objective(problem, sol.theta_bar);
  sol.dual_residual = t_hi - t_lo;

  if (uncertified > 0 && uncertified * 2 >= outer && outer > 0)
    throw SolverFailure(
        "solve_sdr: feasibility subproblems exhausted max_iter without a "
        "verdict; increase max_iter",
        sol);
  return sol;
}

RisConfiguration gaussian_randomization(const SdrSolution& solution,
                                        const SdrProblem& problem,
                                        int n_candidates, std::uint64_t seed) {
  if (n_candidates < 1)
    throw std::invalid_argument("gaussian_randomization: n_candidates must be >= 1");
  const int n = problem.n;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(solution.theta_bar);
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  const Eigen::MatrixXcd factor =
      es.eigenvectors() * lam.cwiseSqrt().asDiagonal();

  const auto unit_modulus = [n](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd u(n);
    for (int i = 0; i < n; ++i)
      u(i) = (v(i) == std::complex<double>(0.0, 0.0))
                 ? std::complex<double>(1.0, 0.0)
                 : std::polar(1.0, std::arg(v(i)));
    return u;
  };

  // dominant-eigenvector candidate first, then the Gaussian draws
  Eigen::VectorXcd best = unit_modulus(es.eigenvectors().col(n - 1));
  double best_obj = rank1_objective(problem, best);

  Rng rng(seed);
  Eigen::VectorXcd g(n);
  for (int c = 0; c < n_candidates; ++c) {
    for (int i = 0; i < n; ++i) g(i) = rng.complex_gaussian();
    const Eigen::VectorXcd candidate = unit_modulus(factor * g);
    const double obj = rank1_objective(problem, candidate);
    if (obj > best_obj) {
      best_obj = obj;
      best = candidate;
    }
  }
  return RisConfiguration{std::move(best)};
}

}  // namespace risim
