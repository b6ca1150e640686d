#pragma once
#include <vector>

#include "core/classifier.hpp"
#include "core/config.hpp"
#include "core/features.hpp"
#include "core/types.hpp"

namespace wscec {

struct RunOutput {
  ClassificationReport report;
  // One entry per row when keep_features is set (empty spd/cloud otherwise
  // for beats whose extraction failed).
  std::vector<BeatFeatures> features;
};

// Full batch algorithm: select b from the standard beat, extract features for
// every beat in parallel (cfg.jobs workers, 0 = hardware), classify, merge in
// beat order. Per-beat failures become Unclassified rows with a note; only a
// failing standard beat aborts the run.
RunOutput wscec_run(const std::vector<Heartbeat>& beats, const Heartbeat& standard,
                    const Config& cfg, bool keep_features = false);

}  // namespace wscec
