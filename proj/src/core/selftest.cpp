#include "core/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "core/classifier.hpp"
#include "core/embed.hpp"
#include "core/error.hpp"
#include "core/features.hpp"
#include "core/fixtures.hpp"
#include "core/local_stats.hpp"
#include "core/pipeline.hpp"
#include "core/rng.hpp"
#include "core/spd.hpp"

namespace wscec {
namespace {

struct Check {
  SelftestResult* res;
  std::ostream* out;
  void operator()(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++res->passed;
      (*out) << "[ok]   " << name << "\n";
    } else {
      ++res->failed;
      (*out) << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
};

}  // namespace

SelftestResult selftest(std::uint64_t seed, std::ostream& out) {
  SelftestResult res;
  Check check{&res, &out};
  Rng rng(seed);
  const Config cfg;

  // Closed form vs basis-sum oracle.
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Eigen::MatrixXd S = rng.spd(3);
      const double a = scalar_curvature(S), o = scalar_curvature_oracle(S);
      worst = std::max(worst, std::fabs(a - o) / std::fabs(o));
    }
    for (int i = 0; i < 10; ++i) {
      const Eigen::MatrixXd S = rng.spd(2);
      const double a = scalar_curvature(S), o = scalar_curvature_oracle(S);
      worst = std::max(worst, std::fabs(a - o) / std::fabs(o));
    }
    check("curvature closed form vs basis-sum oracle (rel err <= 1e-8)", worst <= 1e-8,
          "worst rel err " + std::to_string(worst));
  }

  // rho(I_2) = 3/2 and homogeneity rho(cS) = rho(S)/c.
  check("rho(I_2) == 3/2",
        std::fabs(scalar_curvature(Eigen::MatrixXd::Identity(2, 2)) - 1.5) <= 1e-12);
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      const Eigen::MatrixXd S = rng.spd(3);
      const double r = scalar_curvature(S);
      for (double c : {0.1, 2.0, 10.0})
        if (std::fabs(c * scalar_curvature(c * S) - r) > 1e-10 * r) ok = false;
    }
    check("homogeneity c*rho(c*S) == rho(S)", ok);
  }

  // Bound 0 < rho < 3n(n-1)/lambda_min2.
  {
    bool ok = true;
    for (int n : {2, 3, 5})
      for (int i = 0; i < 100 && ok; ++i) {
        const Eigen::MatrixXd S = rng.spd(n);
        const double r = scalar_curvature(S);
        if (!(r > 0.0 && r < curvature_bound(S))) ok = false;
      }
    check("curvature bound 0 < rho < 3n(n-1)/lambda_min2", ok);
  }

  // Sylvester residual and sqrt reconstruction.
  {
    double worst_syl = 0.0, worst_sqrt = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::MatrixXd S = rng.spd(3);
      const Eigen::MatrixXd Y = rng.symmetric(3);
      const Eigen::MatrixXd G = sylvester_solve(S, Y);
      worst_syl = std::max(worst_syl, (S * G + G * S - Y).norm() / Y.norm());
      const Eigen::MatrixXd R = spd_sqrt(S);
      worst_sqrt = std::max(worst_sqrt, (R * R - S).norm() / S.norm());
    }
    check("sylvester residual <= 1e-10 * |Y|", worst_syl <= 1e-10);
    check("spd_sqrt reconstruction <= 1e-10 relative", worst_sqrt <= 1e-10);
  }

  // Wasserstein analytic cases.
  {
    GaussianPoint a{Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Identity(3, 3)};
    GaussianPoint b{Eigen::VectorXd::Zero(3), 4.0 * Eigen::MatrixXd::Identity(3, 3)};
    GaussianPoint c = a;
    c.mu << 1.0, 2.0, 2.0;
    const bool ok = std::fabs(wasserstein_distance(a, a)) <= 1e-12 &&
                    std::fabs(wasserstein_distance(a, b) - std::sqrt(3.0)) <= 1e-12 &&
                    std::fabs(wasserstein_distance(a, c) - 3.0) <= 1e-12;
    check("wasserstein analytic cases (0, sqrt(n), |dmu|)", ok);
  }

  // Embedding: window count, DFT oracle, Parseval.
  {
    std::vector<double> sig(kBeatLen);
    for (int i = 0; i < kBeatLen; ++i) sig[i] = rng.normal();
    const EuclideanCloud cloud = embed(sig, cfg);
    check("embed yields 289 points for n=300, l=10, tau=1", cloud.size() == 289);

    std::vector<double> w(10);
    for (auto& v : w) v = rng.normal();
    const FourierWindow fw = fft_window(w);
    double worst = 0.0, power_t = 0.0, power_f = 0.0;
    for (int k = 0; k < 10; ++k) {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < 10; ++i) {
        const double ang = -2.0 * M_PI * k * i / 10.0;
        re += w[static_cast<size_t>(i)] * std::cos(ang);
        im += w[static_cast<size_t>(i)] * std::sin(ang);
      }
      worst = std::max(worst, std::fabs(fw.a[static_cast<size_t>(k)] - re));
      worst = std::max(worst, std::fabs(fw.b[static_cast<size_t>(k)] + im));
      power_f += re * re + im * im;
    }
    for (double v : w) power_t += v * v;
    check("fft_window matches direct DFT summation (<= 1e-10)", worst <= 1e-10);
    check("fft_window Parseval (<= 1e-8 relative)",
          std::fabs(power_f - 10.0 * power_t) <= 1e-8 * power_f);
  }

  // kNN against the exhaustive-sort oracle.
  {
    EuclideanCloud cloud;
    for (int i = 0; i < 50; ++i) {
      Eigen::VectorXd p(3);
      p << rng.normal(), rng.normal(), rng.normal();
      cloud.push_back(p);
    }
    const auto nb = knn(cloud, 7);
    bool ok = nb.size() == cloud.size();
    for (size_t i = 0; i < cloud.size() && ok; ++i) {
      std::vector<std::pair<double, int>> all;
      for (size_t j = 0; j < cloud.size(); ++j)
        all.emplace_back((cloud[j] - cloud[i]).squaredNorm(), static_cast<int>(j));
      std::sort(all.begin(), all.end());
      for (int j = 0; j < 7; ++j)
        if (nb[i].members[static_cast<size_t>(j)] != all[static_cast<size_t>(j)].second)
          ok = false;
    }
    check("knn matches exhaustive-sort oracle", ok);
  }

  // Histogram count conservation.
  {
    std::vector<double> w;
    for (int i = 0; i < 500; ++i) w.push_back(260.0 * rng.uniform() - 5.0);
    const Histogram h = histogram(w, 1.0, 200.0);
    long long total = h.overflow_count;
    for (long long c : h.counts) total += c;
    check("histogram conserves counts (incl. overflow)", total == 500);
  }

  // Partition totality over the dispersion plane (plus every label reached).
  {
    std::set<int> seen;
    bool ok = true;
    for (double c1 = 0.0; c1 <= 200.0 && ok; c1 += 0.5)
      for (double c2 = 0.0; c2 <= 300.0 && ok; c2 += 0.5) {
        const ClassifyResult r = classify(c1, c2, 200.0);
        if (r.domain < 0 || r.domain > 4) ok = false;
        seen.insert(static_cast<int>(r.label));
      }
    check("partition totality on [0,200]x[0,300] grid", ok && seen.size() == 10,
          "labels reached: " + std::to_string(seen.size()));
  }

  // evaluate vs direct confusion counting on random assignments.
  {
    ClassificationReport rep;
    const TrueLabel truths[7] = {TrueLabel::N,   TrueLabel::LBBB, TrueLabel::RBBB,
                                 TrueLabel::AP,  TrueLabel::PVC,  TrueLabel::FVN,
                                 TrueLabel::VF};
    const Label labels[10] = {Label::Normal,
                              Label::AtrialPremature,
                              Label::VentricularFlutter,
                              Label::FusionVentricularNormal,
                              Label::PrematureVentricular,
                              Label::VentricularAbnormal,
                              Label::LeftBundleBranchBlock,
                              Label::RightBundleBranchBlock,
                              Label::BundleBranchBlock,
                              Label::Unclassified};
    for (int i = 0; i < 500; ++i) {
      BeatRow row;
      row.beat_index = i;
      row.truth = truths[static_cast<int>(rng.uniform() * 7) % 7];
      row.label = labels[static_cast<int>(rng.uniform() * 10) % 10];
      rep.rows.push_back(row);
    }
    const Metrics m = evaluate(rep);
    bool ok = true;
    for (int j = 0; j < 5 && ok; ++j) {
      long long qj = 0, hit = 0, noise = 0, rest = 0;
      for (const BeatRow& r : rep.rows) {
        const int tg = true_label_group(r.truth), pg = label_group(r.label);
        if (tg == j) ++qj;
        if (tg == j && pg == j) ++hit;
        if (tg != j) {
          ++rest;
          if (pg == j) ++noise;
        }
      }
      const double tpr = qj ? static_cast<double>(hit) / qj : 1.0;
      const double nrr = rest ? 1.0 - static_cast<double>(noise) / rest : 1.0;
      if (m.tpr[j] != tpr || m.nrr[j] != nrr) ok = false;
    }
    check("evaluate matches confusion-counting oracle exactly", ok);
  }

  // Pipeline determinism on the bundled normal fixture.
  {
    const Heartbeat hb = fixture_beat("normal");
    const BeatFeatures f1 = feature_extract(hb, cfg, cfg.b_cap());
    const BeatFeatures f2 = feature_extract(hb, cfg, cfg.b_cap());
    const bool ok = f1.disp.defined && f2.disp.defined &&
                    std::memcmp(&f1.disp.cur1, &f2.disp.cur1, sizeof(double)) == 0 &&
                    std::memcmp(&f1.disp.cur2, &f2.disp.cur2, sizeof(double)) == 0;
    check("feature extraction is bit-deterministic", ok);
  }

  out << (res.ok() ? "SELFTEST PASS" : "SELFTEST FAIL") << " (" << res.passed << " passed, "
      << res.failed << " failed)\n";
  return res;
}

}  // namespace wscec
