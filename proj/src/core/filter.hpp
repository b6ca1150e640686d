#pragma once
#include <vector>

#include "core/types.hpp"

namespace wscec {

// Digital lowpass transfer function b/a (bilinear-transformed Butterworth).
struct FilterCoeffs {
  std::vector<double> b;
  std::vector<double> a;  // a[0] == 1
};

FilterCoeffs butter_lowpass(int order, double cutoff_hz, double fs);

// Direct-form II transposed single pass with initial state zi (length n-1).
std::vector<double> lfilter(const FilterCoeffs& fc, const std::vector<double>& x,
                            const std::vector<double>& zi);

// Steady-state initial conditions for a unit-step input.
std::vector<double> lfilter_zi(const FilterCoeffs& fc);

// Forward-backward filtering with odd-reflection padding of 3*(n-1) samples;
// zero phase, squared magnitude response.
std::vector<double> filtfilt(const FilterCoeffs& fc, const std::vector<double>& x);

RawRecord lowpass_filter(const RawRecord& rec, double cutoff_hz, int order);

}  // namespace wscec
