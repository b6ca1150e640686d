#include "core/rpeaks.hpp"

#include <cmath>
#include <deque>

#include "core/error.hpp"

namespace wscec {
namespace {

// Centered sliding maximum via monotonic deque, O(n).
std::vector<double> rolling_max(const std::vector<double>& x, long long half) {
  const long long n = static_cast<long long>(x.size());
  std::vector<double> out(static_cast<size_t>(n));
  std::deque<long long> dq;  // indices with decreasing values
  long long next = 0;        // first index not yet pushed
  for (long long i = 0; i < n; ++i) {
    const long long hi = std::min(n - 1, i + half);
    for (; next <= hi; ++next) {
      while (!dq.empty() && x[static_cast<size_t>(dq.back())] <= x[static_cast<size_t>(next)])
        dq.pop_back();
      dq.push_back(next);
    }
    const long long lo = i - half;
    while (dq.front() < lo) dq.pop_front();
    out[static_cast<size_t>(i)] = x[static_cast<size_t>(dq.front())];
  }
  return out;
}

}  // namespace

std::vector<long long> detect_r_peaks(const std::vector<double>& x, double fs,
                                      double thr_frac, double roll_win_s,
                                      double refractory_s) {
  if (!(fs > 0.0)) throw_param("detect_r_peaks: fs must be > 0");
  if (!(thr_frac > 0.0 && thr_frac < 1.0))
    throw_param("detect_r_peaks: threshold fraction must lie in (0,1)");
  const long long n = static_cast<long long>(x.size());
  if (n == 0) return {};
  const long long half = std::llround(0.5 * roll_win_s * fs);
  const long long refractory = std::llround(refractory_s * fs);
  const std::vector<double> rmax = rolling_max(x, half);

  std::vector<long long> peaks;
  long long i = 0;
  while (i < n) {
    if (!(x[static_cast<size_t>(i)] > thr_frac * rmax[static_cast<size_t>(i)])) {
      ++i;
      continue;
    }
    long long j = i;  // supra-threshold run [i, j]
    while (j + 1 < n &&
           x[static_cast<size_t>(j + 1)] > thr_frac * rmax[static_cast<size_t>(j + 1)])
      ++j;
    long long p = i;
    for (long long t = i + 1; t <= j; ++t)
      if (x[static_cast<size_t>(t)] > x[static_cast<size_t>(p)]) p = t;
    // Require a strict local maximum; plateaus and edges are not peaks.
    const bool strict = p > 0 && p + 1 < n &&
                        x[static_cast<size_t>(p)] > x[static_cast<size_t>(p - 1)] &&
                        x[static_cast<size_t>(p)] > x[static_cast<size_t>(p + 1)];
    if (strict) {
      if (!peaks.empty() && p - peaks.back() < refractory) {
        if (x[static_cast<size_t>(p)] > x[static_cast<size_t>(peaks.back())]) peaks.back() = p;
      } else {
        peaks.push_back(p);
      }
    }
    i = j + 1;
  }
  return peaks;
}

std::vector<long long> detect_r_peaks(const RawRecord& rec, double thr_frac,
                                      double roll_win_s, double refractory_s) {
  return detect_r_peaks(rec.samples, rec.fs, thr_frac, roll_win_s, refractory_s);
}

}  // namespace wscec
