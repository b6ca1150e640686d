#pragma once
#include <string>
#include <vector>

#include "core/types.hpp"

namespace wscec {

// Endpoint-aligned linear resampling to m samples.
std::vector<double> resample_linear(const std::vector<double>& x, int m);

// Cut [r - pre, r + post) around each peak (pre/post scaled from their 360 Hz
// values by fs/360), resample to 300 samples, record r_index. Peaks too close
// to the record boundary are skipped and noted in skipped_log when given.
std::vector<Heartbeat> segment_heartbeats(const RawRecord& rec,
                                          const std::vector<long long>& peaks,
                                          int pre_360 = 100, int post_360 = 200,
                                          std::vector<std::string>* skipped_log = nullptr);

}  // namespace wscec
