#include "core/embed.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace wscec {

std::vector<std::vector<double>> window_slices(const std::vector<double>& samples,
                                               int l, int tau) {
  const int n = static_cast<int>(samples.size());
  if (l < 1 || tau < 1 || tau > l) throw_param("window_slices: need 1 <= tau <= l");
  if (l > n) throw_param("window_slices: window length " + std::to_string(l) +
                         " exceeds signal length " + std::to_string(n));
  const int n_hat = (n - l) / tau;
  if (n_hat < 2)
    throw_param("window_slices: n_hat = " + std::to_string(n_hat) +
                " leaves no windows (k runs 1..n_hat-1)");
  std::vector<std::vector<double>> out;
  out.reserve(n_hat - 1);
  for (int k = 1; k <= n_hat - 1; ++k) {
    const int start = k * tau;
    out.emplace_back(samples.begin() + start, samples.begin() + start + l);
  }
  return out;
}

FourierWindow fft_window(const std::vector<double>& window) {
  const int l = static_cast<int>(window.size());
  if (l < 1) throw_param("fft_window: empty window");
  FourierWindow fw;
  fw.a.resize(l);
  fw.b.resize(l);
  const double step = 2.0 * M_PI / l;
  for (int k = 0; k < l; ++k) {
    double re = 0.0, im = 0.0;
    for (int i = 0; i < l; ++i) {
      const double ang = step * k * i;
      re += window[i] * std::cos(ang);
      im -= window[i] * std::sin(ang);  // C_k = sum t_i e^{-j 2pi k i / l}
    }
    fw.a[k] = re;
    fw.b[k] = -im;
  }
  return fw;
}

EuclideanCloud embed(const std::vector<double>& samples, const Config& cfg) {
  if (cfg.d < 1 || cfg.d > cfg.l) throw_param("embed: need 1 <= d <= l");
  auto slices = window_slices(samples, cfg.l, cfg.tau);
  const double scale = 2.0 / cfg.l;
  EuclideanCloud cloud;
  cloud.reserve(slices.size());
  for (auto& w : slices) {
    FourierWindow fw = fft_window(w);
    // Interleave (a0, a1, b1, a2, b2, ...) and keep the first d entries.
    Eigen::VectorXd p(cfg.d);
    for (int c = 0; c < cfg.d; ++c) {
      if (c == 0) p(0) = fw.a[0];
      else if (c % 2 == 1) p(c) = fw.a[(c + 1) / 2];
      else p(c) = fw.b[c / 2];
    }
    cloud.push_back(scale * p);
  }
  return cloud;
}

}  // namespace wscec
