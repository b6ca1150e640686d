#pragma once
#include <Eigen/Dense>
#include <vector>

#include "core/config.hpp"
#include "core/types.hpp"

namespace wscec {

// DFT coefficients of one window under C_k = a_k + b_k j: a_k = Re C_k,
// b_k = -Im C_k (the k-th sine coefficient of a real signal).
struct FourierWindow {
  std::vector<double> a;
  std::vector<double> b;
};

using EuclideanCloud = std::vector<Eigen::VectorXd>;

// Sliding windows p_k = [t_{k*tau} .. t_{k*tau+l-1}] for k = 1..n_hat-1 with
// n_hat = floor((n-l)/tau); the k=0 window is dropped per the source indexing.
std::vector<std::vector<double>> window_slices(const std::vector<double>& samples,
                                               int l, int tau);

// Direct O(l^2) DFT; correctness is defined against this summation.
FourierWindow fft_window(const std::vector<double>& window);

// Point = (2/l) * first d of the interleaved sequence (a0, a1, b1, a2, b2, ...).
EuclideanCloud embed(const std::vector<double>& samples, const Config& cfg);

}  // namespace wscec
