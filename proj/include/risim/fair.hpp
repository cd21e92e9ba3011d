#pragma once

#include <Eigen/Dense>
#include <vector>

#include "risim/geometry.hpp"
#include "risim/optimizer.hpp"
#include "risim/sampling.hpp"

namespace risim {

// Distance-proportional convex weights: lambda_i = ||q - w_i|| / sum_k ||q - w_k||.
struct FairWeights {
  std::vector<double> lambdas;
};

FairWeights fair_weights(const Vec3& q, const GroundPointSet& points);

// Closed-form lifted matrix sum_i lambda_i gain_conj[i]: PSD with exactly
// unit diagonal, no optimization involved. Packaged as an SdrSolution so the
// rank-1 extraction path is shared with the solver output.
SdrSolution fair_combination(const SdrProblem& problem,
                             const FairWeights& weights);

}  // namespace risim
