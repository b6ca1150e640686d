#pragma once
#include <vector>

#include "core/types.hpp"

namespace wscec {

// Adaptive-threshold R-peak search. Threshold at i is thr_frac times the
// rolling max over a centered roll_win_s window; candidates are the argmax of
// each supra-threshold run; plateaus (non-strict maxima) are rejected; peaks
// closer than refractory_s keep the taller one.
std::vector<long long> detect_r_peaks(const std::vector<double>& x, double fs,
                                      double thr_frac, double roll_win_s,
                                      double refractory_s);

std::vector<long long> detect_r_peaks(const RawRecord& rec, double thr_frac = 0.6,
                                      double roll_win_s = 2.0, double refractory_s = 0.2);

}  // namespace wscec
