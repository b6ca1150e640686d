#pragma once
#include <vector>

#include "core/config.hpp"
#include "core/embed.hpp"
#include "core/spd.hpp"

namespace wscec {

// Indices of the k nearest points (Euclidean, self-inclusive, ties by lower index).
struct Neighborhood {
  int center;
  std::vector<int> members;
};

std::vector<Neighborhood> knn(const EuclideanCloud& cloud, int k);

// Mean and scatter of one neighborhood. The scatter is the literal sum
// Sigma = sum (N_ij - mu)^T (N_ij - mu) by default (cov_norm = Sum), or the
// k-averaged version under cov_norm = Mean; symmetrized, then regularized by
// delta = 1e-10 * max(1, trace) on the diagonal.
GaussianPoint local_gaussian(const EuclideanCloud& cloud, const Neighborhood& nbhd,
                             Config::CovNorm norm);

// Full lift: one GaussianPoint per source point, order preserved.
SpdCloud lift(const EuclideanCloud& cloud, const Config& cfg);

}  // namespace wscec
