#pragma once
#include <Eigen/Dense>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/features.hpp"
#include "core/types.hpp"

namespace wscec {

// Outcome of the rectangle partition for one dispersion point.
struct ClassifyResult {
  Label label = Label::Unclassified;
  int domain = 4;               // 0..4
  bool boundary_flag = false;   // cur1 landed on an unassigned bracket boundary
};

// Rectangles (with D0 upper edge at b):
//   D0 = (25, b] x [0, 25]            -> Normal
//   D1 = (25, 90] x (25, inf)         -> AtrialPremature
//   D2 = (10, 25] x [0, inf):
//        D21 [0,50], D22 [40,70], D23 [60,inf); overlap -> VentricularAbnormal
//   D3 = [0, 10) x [0, inf):
//        D31 [0,140], D32 [100,inf);  overlap -> BundleBranchBlock
//   D4 = everything else              -> Unclassified
// cur1 == 10 sits between D2 and D3 and is routed to D4 with the flag set.
ClassifyResult classify(double cur1, double cur2, double b);

double select_b(double max_standard_wsc, int d, double epsilon);

// One line of the batch report.
struct BeatRow {
  std::string source_id;
  long long beat_index = 0;
  DispersionPoint disp;
  Label label = Label::Unclassified;
  int domain = 4;
  TrueLabel truth = TrueLabel::Unlabeled;
  std::string note;
};

struct ClassificationReport {
  std::vector<BeatRow> rows;
  double b = 0.0;
  std::string standard_id;
  Config params;
};

// Per-group TPR/NRR plus the raw tallies behind them. Groups indexed 0..4
// (Normal, Atrial, Ventricular, BundleBranchBlock, Unclassified). Empty
// denominators score 1.0 (vacuously perfect).
struct Metrics {
  double tpr[5] = {0, 0, 0, 0, 0};
  double nrr[5] = {0, 0, 0, 0, 0};
  long long true_count[5] = {0, 0, 0, 0, 0};   // |Q_j|
  long long pred_count[5] = {0, 0, 0, 0, 0};   // |Q~_j|
  long long hit_count[5] = {0, 0, 0, 0, 0};    // |Q~_j ∩ Q_j|
  long long noise_hit[5] = {0, 0, 0, 0, 0};    // |Q~_j ∩ U_{k!=j} Q_k|
  long long noise_den[5] = {0, 0, 0, 0, 0};    // |U_{k!=j} Q_k|
};

// Throws a Truth error if any row lacks ground truth.
Metrics evaluate(const ClassificationReport& report);

struct ConfidenceEllipse {
  Eigen::Vector2d center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double angle = 0.0;  // radians, major axis vs cur1 axis
  double coverage = 0.0;
};

// Quantile of the chi-squared distribution (bisection on the regularized
// lower incomplete gamma function).
double chi2_quantile(double p, int dof);

ConfidenceEllipse confidence_ellipse(const std::vector<Eigen::Vector2d>& points,
                                     double coverage);

}  // namespace wscec
