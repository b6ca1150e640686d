#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace wscec {

// Deterministic cross-platform sampling. mt19937_64 output is pinned by the
// standard; the distributions below are hand-rolled because std::*_distribution
// implementations differ between standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0,1)
    return (eng_() >> 11) * 0x1.0p-53;
  }

  double normal() {  // Box-Muller, one value per call
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::MatrixXd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXd M(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) M(i, j) = normal();
    return M;
  }

  // Well-conditioned random SPD: A^T A + jitter*I with A n x n Gaussian.
  Eigen::MatrixXd spd(int n, double jitter = 0.1) {
    Eigen::MatrixXd A = gaussian_matrix(n, n);
    return A.transpose() * A + jitter * Eigen::MatrixXd::Identity(n, n);
  }

  // Random symmetric matrix (tangent vector).
  Eigen::MatrixXd symmetric(int n) {
    Eigen::MatrixXd A = gaussian_matrix(n, n);
    return 0.5 * (A + A.transpose());
  }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wscec
