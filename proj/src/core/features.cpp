#include "core/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/embed.hpp"
#include "core/error.hpp"
#include "core/spd.hpp"

namespace wscec {

std::vector<double> curvature_sequence(const SpdCloud& cloud) {
  std::vector<double> wsc;
  wsc.reserve(cloud.size());
  for (size_t i = 0; i < cloud.size(); ++i) {
    try {
      wsc.push_back(scalar_curvature(cloud[i].sigma));
    } catch (const Error& e) {
      throw_domain("curvature at cloud point " + std::to_string(i) + ": " + e.what());
    }
  }
  return wsc;
}

Histogram histogram(const std::vector<double>& wsc, double m, double b) {
  if (!(m > 0.0)) throw_param("histogram: bin width m must be > 0");
  if (!(b > 0.0)) throw_param("histogram: upper bound b must be > 0");
  if (m > b) throw_param("histogram: bin width m must not exceed b");
  Histogram h;
  h.m = m;
  h.b = b;
  const long long top = static_cast<long long>(std::floor(b / m));
  h.counts.assign(static_cast<size_t>(top) + 1, 0);
  for (double w : wsc) {
    const double fj = std::floor(w / m);
    if (fj >= 0.0 && fj <= static_cast<double>(top))
      ++h.counts[static_cast<size_t>(fj)];
    else
      ++h.overflow_count;
  }
  return h;
}

DispersionPoint dispersion(const std::vector<double>& wsc, const Histogram& hist,
                           int s, Config::Cur2Form form) {
  DispersionPoint out;
  const double m = hist.m, b = hist.b;

  // cur1: median of curvatures inside [m*s, b].
  std::vector<double> u1;
  for (double w : wsc)
    if (w >= m * static_cast<double>(s) && w <= b) u1.push_back(w);
  if (u1.empty()) {
    out.reason = "no curvature values in [m*s, b]";
    return out;
  }
  std::sort(u1.begin(), u1.end());
  const size_t n1 = u1.size();
  out.cur1 = (n1 % 2 == 1) ? u1[n1 / 2] : 0.5 * (u1[n1 / 2 - 1] + u1[n1 / 2]);

  // cur2: spread of the occupied bins above s.
  const long long top = static_cast<long long>(hist.counts.size()) - 1;  // == floor(b/m)
  std::vector<long long> u2;
  for (long long j = s + 1; j <= top; ++j)
    if (hist.counts[static_cast<size_t>(j)] != 0) u2.push_back(j);
  const long long n2 = static_cast<long long>(u2.size());
  if (n2 <= static_cast<long long>(s) + 1) {
    out.reason = "too few occupied bins above s (|U2| = " + std::to_string(n2) + ")";
    return out;
  }
  double occupied_sum = 0.0;
  for (long long j : u2) occupied_sum += static_cast<double>(hist.counts[static_cast<size_t>(j)]);
  const double inner_div = (form == Config::Cur2Form::Paper)
                               ? static_cast<double>(top)
                               : static_cast<double>(n2);
  const double outer_div = (form == Config::Cur2Form::Paper)
                               ? static_cast<double>(n2 - s - 1)
                               : static_cast<double>(n2);
  const double mean = occupied_sum / inner_div;
  double acc = 0.0;
  for (long long j = s + 1; j <= top; ++j) {
    const double dlt = static_cast<double>(hist.counts[static_cast<size_t>(j)]) - mean;
    acc += dlt * dlt;
  }
  out.cur2 = acc / outer_div;
  out.defined = true;
  return out;
}

BeatFeatures feature_extract(const Heartbeat& beat, const Config& cfg, double b) {
  BeatFeatures f;
  f.cloud = embed(beat.samples, cfg);
  f.spd = lift(f.cloud, cfg);
  f.wsc = curvature_sequence(f.spd);
  f.hist = histogram(f.wsc, cfg.m, b);
  f.disp = dispersion(f.wsc, f.hist, cfg.s, cfg.cur2_form);
  return f;
}

}  // namespace wscec
