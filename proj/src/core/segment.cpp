#include "core/segment.hpp"

#include <cmath>

#include "core/error.hpp"

namespace wscec {

std::vector<double> resample_linear(const std::vector<double>& x, int m) {
  const int w = static_cast<int>(x.size());
  if (w < 2) throw_param("resample_linear: need at least 2 source samples");
  if (m < 2) throw_param("resample_linear: need at least 2 output samples");
  std::vector<double> out(static_cast<size_t>(m));
  const double scale = static_cast<double>(w - 1) / static_cast<double>(m - 1);
  for (int i = 0; i < m; ++i) {
    const double pos = i * scale;
    int j = static_cast<int>(std::floor(pos));
    if (j >= w - 1) j = w - 2;
    const double frac = pos - j;
    out[static_cast<size_t>(i)] =
        x[static_cast<size_t>(j)] * (1.0 - frac) + x[static_cast<size_t>(j + 1)] * frac;
  }
  return out;
}

std::vector<Heartbeat> segment_heartbeats(const RawRecord& rec,
                                          const std::vector<long long>& peaks,
                                          int pre_360, int post_360,
                                          std::vector<std::string>* skipped_log) {
  if (!(rec.fs > 0.0)) throw_param("segment_heartbeats: sampling rate must be > 0");
  if (pre_360 < 1 || post_360 < 1) throw_param("segment_heartbeats: pre/post must be >= 1");
  const double ratio = rec.fs / 360.0;
  const long long pre = std::llround(pre_360 * ratio);
  const long long post = std::llround(post_360 * ratio);
  const long long n = static_cast<long long>(rec.samples.size());
  std::vector<Heartbeat> beats;
  for (long long r : peaks) {
    if (r - pre < 0 || r + post > n) {
      if (skipped_log)
        skipped_log->push_back("peak " + std::to_string(r) + " too close to record boundary");
      continue;
    }
    const long long w = pre + post;
    std::vector<double> window(rec.samples.begin() + (r - pre), rec.samples.begin() + (r + post));
    Heartbeat hb;
    if (w == kBeatLen)
      hb.samples = std::move(window);
    else
      hb.samples = resample_linear(window, kBeatLen);
    hb.r_index = static_cast<int>(
        std::llround(static_cast<double>(pre) * (kBeatLen - 1) / static_cast<double>(w - 1)));
    hb.src_peak_index = r;
    hb.source_id = rec.source_id;
    beats.push_back(std::move(hb));
  }
  return beats;
}

}  // namespace wscec
