#include "risim/fair.hpp"

#include <stdexcept>

namespace risim {

FairWeights fair_weights(const Vec3& q, const GroundPointSet& points) {
  if (points.points.empty())
    throw std::invalid_argument("fair_weights: empty point set");
  FairWeights w;
  w.lambdas.reserve(points.points.size());
  double total = 0.0;
  for (const auto& p : points.points) {
    const double d = distance(q, p);
    if (!(d > 0.0))
      throw std::invalid_argument("fair_weights: point coincides with the platform");
    w.lambdas.push_back(d);
    total += d;
  }
  for (double& l : w.lambdas) l /= total;
  return w;
}

SdrSolution fair_combination(const SdrProblem& problem,
                             const FairWeights& weights) {
  if (weights.lambdas.size() != problem.gain_conj.size())
    throw std::invalid_argument("fair_combination: weight/matrix count mismatch");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(problem.n, problem.n);
  for (std::size_t i = 0; i < weights.lambdas.size(); ++i)
    x += weights.lambdas[i] * problem.gain_conj[i];

  SdrSolution sol;
  sol.theta_bar = std::move(x);
  sol.achieved_min = lifted_objective(problem, sol.theta_bar);
  return sol;
}

}  // namespace risim
