#pragma once
#include <string>

namespace wscec {

// Full parameter set for one pipeline run. Defaults are the published ones:
// l=10, tau=1, d=3, k=20, m=1, s=0, epsilon=0.09.
struct Config {
  // embedding
  int l = 10;
  int tau = 1;
  int d = 3;
  // local statistics
  int k = 20;
  enum class CovNorm { Sum, Mean };
  CovNorm cov_norm = CovNorm::Sum;  // literal unnormalized scatter by default
  // features
  double m = 1.0;
  int s = 0;
  double epsilon = 0.09;
  enum class Cur2Form { Paper, Corrected };
  Cur2Form cur2_form = Cur2Form::Paper;  // literal floor(b/m) inner divisor by default
  // geometry
  enum class DistForm { Paper, L2 };
  DistForm dist_form = DistForm::Paper;  // mean term + Bures term as a plain sum
  // preprocessing
  double cutoff_hz = 50.0;
  int butter_order = 4;
  bool no_filter = false;
  double thr_frac = 0.6;        // R-peak threshold fraction of rolling max
  double roll_win_s = 2.0;      // rolling-max window (seconds)
  double refractory_s = 0.2;    // minimum peak separation (seconds)
  int pre_360 = 100;            // samples before R at 360 Hz
  int post_360 = 200;           // samples after R at 360 Hz
  double annot_window_s = 0.15; // annotation attach window around the peak
  // execution
  int jobs = 0;                 // 0 = hardware concurrency
  unsigned long long seed = 42;

  // Key/value access used by the C API and the CLI (returns false on unknown key).
  bool set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;

  // Fixed cap 3d(d-1)/epsilon from the b-selection rule.
  double b_cap() const;
};

}  // namespace wscec
