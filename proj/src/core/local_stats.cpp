#include "core/local_stats.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace wscec {

std::vector<Neighborhood> knn(const EuclideanCloud& cloud, int k) {
  const int n = static_cast<int>(cloud.size());
  if (k < 2) throw_param("knn: need k >= 2");
  if (k > n) throw_param("knn: k = " + std::to_string(k) + " exceeds point count " +
                         std::to_string(n));
  std::vector<Neighborhood> out;
  out.reserve(n);
  std::vector<std::pair<double, int>> dist(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      dist[j] = {(cloud[i] - cloud[j]).squaredNorm(), j};
    // ties broken by lower index via the pair's second component
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    Neighborhood nb;
    nb.center = i;
    nb.members.reserve(k);
    for (int j = 0; j < k; ++j) nb.members.push_back(dist[j].second);
    out.push_back(std::move(nb));
  }
  return out;
}

GaussianPoint local_gaussian(const EuclideanCloud& cloud, const Neighborhood& nbhd,
                             Config::CovNorm norm) {
  if (nbhd.members.size() < 2) throw_param("local_gaussian: need k >= 2");
  const int d = static_cast<int>(cloud[nbhd.center].size());
  const int k = static_cast<int>(nbhd.members.size());
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (int idx : nbhd.members) mu += cloud[idx];
  mu /= k;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(d, d);
  for (int idx : nbhd.members) {
    Eigen::VectorXd c = cloud[idx] - mu;
    sigma += c * c.transpose();  // row-vector convention: (N-mu)^T (N-mu)
  }
  if (norm == Config::CovNorm::Mean) sigma /= k;
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  const double delta = 1e-10 * std::max(1.0, sigma.trace());
  sigma.diagonal().array() += delta;
  return {std::move(mu), std::move(sigma)};
}

SpdCloud lift(const EuclideanCloud& cloud, const Config& cfg) {
  auto nbhds = knn(cloud, cfg.k);
  SpdCloud out;
  out.reserve(nbhds.size());
  for (auto& nb : nbhds) out.push_back(local_gaussian(cloud, nb, cfg.cov_norm));
  return out;
}

}  // namespace wscec
