#include "core/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace wscec {

ClassifyResult classify(double cur1, double cur2, double b) {
  ClassifyResult r;
  if (cur1 > 25.0 && cur1 <= b && cur2 >= 0.0 && cur2 <= 25.0) {
    r.label = Label::Normal;
    r.domain = 0;
    return r;
  }
  if (cur1 > 25.0 && cur1 <= 90.0 && cur2 > 25.0) {
    r.label = Label::AtrialPremature;
    r.domain = 1;
    return r;
  }
  if (cur1 > 10.0 && cur1 <= 25.0 && cur2 >= 0.0) {
    const bool in21 = cur2 <= 50.0;
    const bool in22 = cur2 >= 40.0 && cur2 <= 70.0;
    const bool in23 = cur2 >= 60.0;
    r.domain = 2;
    if (in21 && !in22)
      r.label = Label::VentricularFlutter;
    else if (in22 && !in21 && !in23)
      r.label = Label::FusionVentricularNormal;
    else if (in23 && !in22)
      r.label = Label::PrematureVentricular;
    else
      r.label = Label::VentricularAbnormal;  // [40,50] or [60,70]
    return r;
  }
  if (cur1 >= 0.0 && cur1 < 10.0 && cur2 >= 0.0) {
    const bool in31 = cur2 <= 140.0;
    const bool in32 = cur2 >= 100.0;
    r.domain = 3;
    if (in31 && !in32)
      r.label = Label::LeftBundleBranchBlock;
    else if (in32 && !in31)
      r.label = Label::RightBundleBranchBlock;
    else
      r.label = Label::BundleBranchBlock;  // [100,140]
    return r;
  }
  r.label = Label::Unclassified;
  r.domain = 4;
  r.boundary_flag = (cur1 == 10.0);  // between D2's open and D3's open ends
  return r;
}

double select_b(double max_standard_wsc, int d, double epsilon) {
  if (!(epsilon > 0.0)) throw_param("select_b: epsilon must be > 0");
  if (d < 2) throw_param("select_b: d must be >= 2");
  const double cap = 3.0 * d * (d - 1) / epsilon;
  return std::min(max_standard_wsc, cap);
}

Metrics evaluate(const ClassificationReport& report) {
  Metrics m;
  for (const BeatRow& row : report.rows) {
    if (row.truth == TrueLabel::Unlabeled)
      throw_truth("beat " + std::to_string(row.beat_index) + " (" + row.source_id +
                  ") has no ground-truth annotation");
    const int tg = true_label_group(row.truth);
    const int pg = label_group(row.label);
    ++m.true_count[tg];
    ++m.pred_count[pg];
    if (tg == pg) ++m.hit_count[tg];
    if (tg != pg) ++m.noise_hit[pg];
  }
  const long long total = static_cast<long long>(report.rows.size());
  for (int j = 0; j < 5; ++j) {
    m.noise_den[j] = total - m.true_count[j];
    m.tpr[j] = (m.true_count[j] == 0)
                   ? 1.0
                   : static_cast<double>(m.hit_count[j]) / static_cast<double>(m.true_count[j]);
    m.nrr[j] = (m.noise_den[j] == 0)
                   ? 1.0
                   : 1.0 - static_cast<double>(m.noise_hit[j]) /
                               static_cast<double>(m.noise_den[j]);
  }
  return m;
}

namespace {

// Regularized lower incomplete gamma P(a, x), series branch.
double gamma_p_series(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper tail Q(a, x) by Lentz continued fraction; valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

}  // namespace

double chi2_quantile(double p, int dof) {
  if (!(p > 0.0 && p < 1.0)) throw_param("chi2_quantile: p must lie in (0,1)");
  if (dof < 1) throw_param("chi2_quantile: dof must be >= 1");
  const double a = 0.5 * dof;
  auto cdf = [a](double x) { return gamma_p(a, 0.5 * x); };
  double hi = 1.0;
  while (cdf(hi) < p && hi < 1e12) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

ConfidenceEllipse confidence_ellipse(const std::vector<Eigen::Vector2d>& points,
                                     double coverage) {
  if (points.size() < 3) throw_param("confidence_ellipse: need at least 3 points");
  if (!(coverage > 0.0 && coverage < 1.0))
    throw_param("confidence_ellipse: coverage must lie in (0,1)");
  const double n = static_cast<double>(points.size());
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& p : points) mean += p;
  mean /= n;
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector2d c = p - mean;
    cov += c * c.transpose();
  }
  cov /= (n - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
  const Eigen::Vector2d lam = es.eigenvalues();  // ascending
  if (lam(0) <= 1e-12 * std::max(1.0, lam(1)))
    throw_domain("confidence_ellipse: degenerate covariance (collinear points)");
  const double q = chi2_quantile(coverage, 2);
  ConfidenceEllipse e;
  e.center = mean;
  e.semi_major = std::sqrt(q * lam(1));
  e.semi_minor = std::sqrt(q * lam(0));
  const Eigen::Vector2d v = es.eigenvectors().col(1);  // major axis direction
  double ang = std::atan2(v(1), v(0));
  if (ang > M_PI / 2) ang -= M_PI;   // orientation is modulo pi
  if (ang <= -M_PI / 2) ang += M_PI;
  e.angle = ang;
  e.coverage = coverage;
  return e;
}

}  // namespace wscec
