#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "core/error.hpp"

namespace wscec {

RunOutput wscec_run(const std::vector<Heartbeat>& beats, const Heartbeat& standard,
                    const Config& cfg, bool keep_features) {
  if (beats.empty()) throw_param("wscec_run: empty batch");
  if (static_cast<int>(standard.samples.size()) != kBeatLen)
    throw_param("wscec_run: standard beat must have 300 samples");

  // Step 1: the standard beat fixes the histogram range.
  BeatFeatures std_feat = feature_extract(standard, cfg, cfg.b_cap());
  double max_wsc = 0.0;
  for (double w : std_feat.wsc) max_wsc = std::max(max_wsc, w);
  const double b = select_b(max_wsc, cfg.d, cfg.epsilon);

  const size_t n = beats.size();
  std::vector<BeatRow> rows(n);
  std::vector<BeatFeatures> feats(keep_features ? n : 0);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      BeatRow row;
      row.source_id = beats[i].source_id;
      row.beat_index = static_cast<long long>(i);
      row.truth = beats[i].annotation;
      try {
        BeatFeatures f = feature_extract(beats[i], cfg, b);
        row.disp = f.disp;
        if (f.disp.defined) {
          const ClassifyResult c = classify(f.disp.cur1, f.disp.cur2, b);
          row.label = c.label;
          row.domain = c.domain;
          if (c.boundary_flag) row.note = "cur1 on the unassigned boundary between D2 and D3";
        } else {
          row.label = Label::Unclassified;
          row.domain = 4;
          row.note = "feature undefined: " + f.disp.reason;
        }
        if (keep_features) feats[i] = std::move(f);
      } catch (const Error& e) {
        row.label = Label::Unclassified;
        row.domain = 4;
        row.note = std::string("extraction failed: ") + e.what();
      }
      rows[i] = std::move(row);
    }
  };

  int jobs = cfg.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunOutput out;
  out.report.rows = std::move(rows);
  out.report.b = b;
  out.report.standard_id = standard.source_id;
  out.report.params = cfg;
  out.features = std::move(feats);
  return out;
}

}  // namespace wscec
