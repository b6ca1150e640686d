#pragma once
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/local_stats.hpp"
#include "core/types.hpp"

namespace wscec {

// Binned WSC sequence: bins j = 0..floor(b/m), bin j covers [m*j, m*(j+1));
// values outside land in overflow_count (count conservation holds).
struct Histogram {
  double m = 1.0;
  double b = 200.0;
  std::vector<long long> counts;
  long long overflow_count = 0;
};

// (cur1, cur2) or the reason the feature is undefined for this beat.
struct DispersionPoint {
  bool defined = false;
  double cur1 = 0.0;
  double cur2 = 0.0;
  std::string reason;  // set when undefined
};

// Everything computed for one beat, retained for optional export.
struct BeatFeatures {
  EuclideanCloud cloud;
  SpdCloud spd;
  std::vector<double> wsc;
  Histogram hist;
  DispersionPoint disp;
};

std::vector<double> curvature_sequence(const SpdCloud& cloud);

Histogram histogram(const std::vector<double>& wsc, double m, double b);

// cur1 = median of {w : m*s <= w <= b} (mean of middle two when even);
// cur2 over bins j >= s+1 with U2 = {j >= s+1 : y_j != 0}:
//   paper form:     inner mean divides by floor(b/m), outer by |U2|-s-1
//   corrected form: both divisors are |U2|
DispersionPoint dispersion(const std::vector<double>& wsc, const Histogram& hist,
                           int s, Config::Cur2Form form);

// embed -> lift -> WSC -> histogram -> dispersion for one beat.
BeatFeatures feature_extract(const Heartbeat& beat, const Config& cfg, double b);

}  // namespace wscec
