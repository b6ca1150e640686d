#pragma once
#include <optional>
#include <string>
#include <vector>

namespace wscec {

constexpr int kBeatLen = 300;

// Continuous single-lead recording in physical units (mV).
struct RawRecord {
  std::vector<double> samples;
  double fs = 0.0;  // Hz
  std::string source_id;
  std::string lead;
};

// Ground-truth annotation classes (seven classes + Unlabeled).
enum class TrueLabel { N, LBBB, RBBB, AP, PVC, FVN, VF, Unlabeled };

// One segmented, filtered beat: exactly 300 samples with the R-peak position.
struct Heartbeat {
  std::vector<double> samples;       // length kBeatLen
  int r_index = 0;                   // R-peak position within the segment
  long long src_peak_index = -1;     // R-peak sample index in the source record (-1 if none)
  TrueLabel annotation = TrueLabel::Unlabeled;
  std::string source_id;
};

// Diagnosis output of the domain partition.
enum class Label {
  Normal,
  AtrialPremature,
  VentricularFlutter,
  FusionVentricularNormal,
  PrematureVentricular,
  VentricularAbnormal,
  LeftBundleBranchBlock,
  RightBundleBranchBlock,
  BundleBranchBlock,
  Unclassified,
};

const char* label_name(Label l);
const char* true_label_name(TrueLabel l);
std::optional<TrueLabel> parse_true_label(const std::string& text);
std::optional<Label> parse_label(const std::string& text);

// Domain grouping for TPR/NRR: 0 normal, 1 atrial, 2 ventricular, 3 BBB, 4 unclassified.
int label_group(Label l);
int true_label_group(TrueLabel l);
const char* group_name(int g);

}  // namespace wscec
