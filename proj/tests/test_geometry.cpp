#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "core/classifier.hpp"
#include "core/config.hpp"
#include "core/embed.hpp"
#include "core/error.hpp"
#include "core/features.hpp"
#include "core/local_stats.hpp"
#include "core/rng.hpp"
#include "core/spd.hpp"

using namespace wscec;

namespace {

#define CHECK_THROWS_KIND(expr, k)                     \
  do {                                                 \
    bool caught_ = false;                              \
    try {                                              \
      expr;                                            \
    } catch (const Error& e_) {                        \
      caught_ = (e_.kind() == (k));                    \
    }                                                  \
    CHECK_MESSAGE(caught_, #expr " should throw " #k); \
  } while (0)

Eigen::MatrixXd diag2(double a, double b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

TEST_CASE("windows: indexing, counts, preconditions") {
  std::vector<double> x(10);
  for (int i = 0; i < 10; ++i) x[i] = i;
  const auto w = window_slices(x, 4, 2);  // n_hat = 3 -> k = 1, 2
  REQUIRE(w.size() == 2);
  CHECK(w[0] == std::vector<double>{2, 3, 4, 5});
  CHECK(w[1] == std::vector<double>{4, 5, 6, 7});

  std::vector<double> beat(300, 0.0);
  CHECK(window_slices(beat, 10, 1).size() == 289);  // floor((300-10)/1) - 1

  CHECK_THROWS_KIND(window_slices(x, 0, 1), ErrorKind::Param);
  CHECK_THROWS_KIND(window_slices(x, 4, 5), ErrorKind::Param);
  CHECK_THROWS_KIND(window_slices(x, 11, 1), ErrorKind::Param);
  CHECK_THROWS_KIND(window_slices({1, 2, 3}, 3, 3), ErrorKind::Param);  // n_hat = 0
}

TEST_CASE("fft window: DC, sine sign convention, DFT oracle, Parseval") {
  {
    const FourierWindow fw = fft_window(std::vector<double>(4, 1.0));
    CHECK(fw.a[0] == doctest::Approx(4.0));
    for (int k = 1; k < 4; ++k) {
      CHECK(std::abs(fw.a[k]) < 1e-12);
      CHECK(std::abs(fw.b[k]) < 1e-12);
    }
  }
  {
    // x_i = sin(2 pi i / 10): C_1 = -5j, so a_1 = 0 and b_1 = +5.
    std::vector<double> x(10);
    for (int i = 0; i < 10; ++i) x[i] = std::sin(2.0 * M_PI * i / 10.0);
    const FourierWindow fw = fft_window(x);
    CHECK(std::abs(fw.a[1]) < 1e-12);
    CHECK(fw.b[1] == doctest::Approx(5.0).epsilon(1e-12));
  }
  Rng rng(123);
  std::vector<double> x(10);
  for (auto& v : x) v = rng.normal();
  const FourierWindow fw = fft_window(x);
  double sum_sq = 0.0, spec_sq = 0.0;
  for (int k = 0; k < 10; ++k) {
    std::complex<double> c = 0.0;
    for (int i = 0; i < 10; ++i)
      c += x[i] * std::exp(std::complex<double>(0.0, -2.0 * M_PI * k * i / 10.0));
    CHECK(fw.a[k] == doctest::Approx(c.real()).epsilon(1e-12));
    CHECK(fw.b[k] == doctest::Approx(-c.imag()).epsilon(1e-12));
    spec_sq += fw.a[k] * fw.a[k] + fw.b[k] * fw.b[k];
  }
  for (double v : x) sum_sq += v * v;
  CHECK(sum_sq == doctest::Approx(spec_sq / 10.0).epsilon(1e-12));
}

TEST_CASE("embed: scaling, count, mean-shift equivariance") {
  Config cfg;  // l=10, tau=1, d=3
  const std::vector<double> flat(300, 1.5);
  const EuclideanCloud cloud = embed(flat, cfg);
  REQUIRE(cloud.size() == 289);
  for (const auto& p : cloud) {
    REQUIRE(p.size() == 3);
    CHECK(p(0) == doctest::Approx(3.0));  // (2/l) * a0 = (2/10) * 10 * 1.5
    CHECK(std::abs(p(1)) < 1e-12);
    CHECK(std::abs(p(2)) < 1e-12);
  }

  Rng rng(7);
  std::vector<double> x(300), shifted(300);
  for (int i = 0; i < 300; ++i) {
    x[i] = rng.normal();
    shifted[i] = x[i] + 0.75;
  }
  const EuclideanCloud c0 = embed(x, cfg), c1 = embed(shifted, cfg);
  for (size_t i = 0; i < c0.size(); ++i) {
    // A constant offset moves only the DC coordinate, by 2*offset.
    CHECK(c1[i](0) - c0[i](0) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(c1[i](1) == doctest::Approx(c0[i](1)).epsilon(1e-10));
    CHECK(c1[i](2) == doctest::Approx(c0[i](2)).epsilon(1e-10));
  }

  Config bad;
  bad.d = 11;
  CHECK_THROWS_KIND(embed(x, bad), ErrorKind::Param);
}

// ---------------------------------------------------------------------------
// kNN + local Gaussians
// ---------------------------------------------------------------------------

TEST_CASE("knn: self-inclusive neighbors and index tie-breaks") {
  EuclideanCloud line;
  for (int i = 0; i < 10; ++i) {
    Eigen::VectorXd p(1);
    p << static_cast<double>(i);
    line.push_back(p);
  }
  const auto nb = knn(line, 3);
  REQUIRE(nb.size() == 10);
  CHECK(nb[0].center == 0);
  CHECK(nb[0].members == std::vector<int>{0, 1, 2});
  auto mid = nb[5].members;
  std::sort(mid.begin(), mid.end());
  CHECK(mid == std::vector<int>{4, 5, 6});

  // Equidistant duplicates: the lower index enters the neighborhood.
  EuclideanCloud dup;
  for (double v : {0.0, 1.0, 1.0, 1.0}) {
    Eigen::VectorXd p(1);
    p << v;
    dup.push_back(p);
  }
  CHECK(knn(dup, 2)[0].members == std::vector<int>{0, 1});

  CHECK_THROWS_KIND(knn(line, 1), ErrorKind::Param);
  CHECK_THROWS_KIND(knn(line, 11), ErrorKind::Param);
}

TEST_CASE("knn: matches an exhaustive-sort oracle") {
  Rng rng(99);
  EuclideanCloud cloud;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd p(3);
    p << rng.normal(), rng.normal(), rng.normal();
    cloud.push_back(p);
  }
  const int k = 7;
  const auto nb = knn(cloud, k);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::pair<double, int>> d;
    for (int j = 0; j < 50; ++j) d.push_back({(cloud[i] - cloud[j]).squaredNorm(), j});
    std::stable_sort(d.begin(), d.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<int> expect;
    for (int j = 0; j < k; ++j) expect.push_back(d[j].second);
    CHECK(nb[i].members == expect);
  }
}

TEST_CASE("local gaussian: hand-computed scatter and normalizations") {
  EuclideanCloud pts;
  const double coords[4][2] = {{1, 0}, {-1, 0}, {0, 2}, {0, -2}};
  for (auto& c : coords) {
    Eigen::VectorXd p(2);
    p << c[0], c[1];
    pts.push_back(p);
  }
  Neighborhood all{0, {0, 1, 2, 3}};

  const GaussianPoint sum = local_gaussian(pts, all, Config::CovNorm::Sum);
  CHECK(sum.mu.norm() < 1e-15);
  CHECK(sum.sigma(0, 0) == doctest::Approx(2.0).epsilon(1e-9));  // + 1e-9 jitter
  CHECK(sum.sigma(1, 1) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(std::abs(sum.sigma(0, 1)) < 1e-15);

  const GaussianPoint mean = local_gaussian(pts, all, Config::CovNorm::Mean);
  CHECK(mean.sigma(0, 0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(mean.sigma(1, 1) == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_KIND(local_gaussian(pts, Neighborhood{0, {0}}, Config::CovNorm::Sum),
                    ErrorKind::Param);
}

TEST_CASE("local gaussian: translation, rotation, scale equivariance") {
  Rng rng(5);
  EuclideanCloud cloud;
  for (int i = 0; i < 30; ++i) {
    Eigen::VectorXd p(3);
    p << rng.normal(), rng.normal(), rng.normal();
    cloud.push_back(p);
  }
  Config cfg;
  cfg.k = 6;
  const SpdCloud base = lift(cloud, cfg);
  REQUIRE(base.size() == 30);

  Eigen::VectorXd t(3);
  t << 3, -1, 2;
  const Eigen::Matrix3d R =
      Eigen::AngleAxisd(0.7, Eigen::Vector3d(1, 2, 2).normalized()).toRotationMatrix();
  const double c = 1.7;

  EuclideanCloud moved, rotated, scaled;
  for (const auto& p : cloud) {
    moved.push_back(p + t);
    rotated.push_back(R * p);
    scaled.push_back(c * p);
  }
  const SpdCloud mv = lift(moved, cfg), rt = lift(rotated, cfg), sc = lift(scaled, cfg);
  for (int i = 0; i < 30; ++i) {
    CHECK((mv[i].mu - base[i].mu - t).norm() < 1e-12);
    CHECK((mv[i].sigma - base[i].sigma).norm() < 1e-10);
    CHECK((rt[i].sigma - R * base[i].sigma * R.transpose()).norm() < 1e-9);
    CHECK((sc[i].sigma - c * c * base[i].sigma).norm() <
          1e-8 * base[i].sigma.norm());  // delta jitter spoils exactness slightly
  }
}

// ---------------------------------------------------------------------------
// SPD geometry
// ---------------------------------------------------------------------------

TEST_CASE("spd: sylvester, metric, sqrt on small exact cases") {
  const Eigen::MatrixXd S = diag2(1.0, 3.0);
  Eigen::MatrixXd Y(2, 2);
  Y << 0, 1, 1, 0;
  const Eigen::MatrixXd G = sylvester_solve(S, Y);
  CHECK(std::abs(G(0, 0)) < 1e-14);
  CHECK(G(0, 1) == doctest::Approx(0.25));  // 1/(1+3)
  CHECK(G(1, 0) == doctest::Approx(0.25));
  CHECK((S * G + G * S - Y).norm() < 1e-14);

  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  CHECK(metric(I2, I2, I2) == doctest::Approx(0.5));  // tr((I/2) I)/2 = n/4

  CHECK((spd_sqrt(diag2(4.0, 9.0)) - diag2(2.0, 3.0)).norm() < 1e-12);
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const Eigen::MatrixXd A = rng.spd(3);
    const Eigen::MatrixXd R = spd_sqrt(A);
    CHECK((R * R - A).norm() < 1e-10 * A.norm());
    const Eigen::MatrixXd Yr = rng.symmetric(3);
    const Eigen::MatrixXd Gr = sylvester_solve(A, Yr);
    CHECK((A * Gr + Gr * A - Yr).norm() < 1e-10 * Yr.norm());
  }
}

TEST_CASE("spd: curvature tensor hand case at the identity") {
  // At S = I: R(X,Y,X,Y) = (3/32) tr(X [X,Y] Y) = 3/8 for these X, Y.
  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  const Eigen::MatrixXd X = diag2(1.0, -1.0);
  Eigen::MatrixXd Y(2, 2);
  Y << 0, 1, 1, 0;
  CHECK(curvature_tensor(I2, X, Y) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(std::abs(curvature_tensor(I2, X, X)) < 1e-14);
}

TEST_CASE("spd: scalar curvature values, homogeneity, bound, terms") {
  CHECK(scalar_curvature(Eigen::MatrixXd::Identity(2, 2)) ==
        doctest::Approx(1.5).epsilon(1e-14));

  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const Eigen::MatrixXd S = rng.spd(3);
    const double rho = scalar_curvature(S);
    CHECK(rho == doctest::Approx(scalar_curvature_oracle(S)).epsilon(1e-9));
    for (double c : {0.1, 2.0, 10.0})
      CHECK(scalar_curvature(c * S) == doctest::Approx(rho / c).epsilon(1e-10));
    CHECK(rho > 0.0);
    CHECK(rho < curvature_bound(S));
    const auto terms = scalar_curvature_terms(S);
    CHECK(3.0 * (terms[0] + terms[1] + terms[2]) == doctest::Approx(rho).epsilon(1e-12));
  }

  Eigen::Vector3d lam(0.5, 2.0, 7.0);
  const Eigen::MatrixXd D = lam.asDiagonal();
  CHECK(lambda_min2(D) == doctest::Approx(2.0));
  CHECK(curvature_bound(D) == doctest::Approx(9.0));  // 3*3*2/2
}

TEST_CASE("spd: domain errors") {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 2, 0, 1;
  CHECK_THROWS_KIND(scalar_curvature(asym), ErrorKind::Domain);
  CHECK_THROWS_KIND(scalar_curvature(diag2(1.0, -1.0)), ErrorKind::Domain);
  // Eigenvalue pairs summing below the underflow floor are rejected.
  CHECK_THROWS_KIND(scalar_curvature(diag2(1e-295, 1e-295)), ErrorKind::Domain);
  CHECK_THROWS_KIND(sylvester_solve(diag2(1.0, 1.0), Eigen::MatrixXd::Zero(3, 3)),
                    ErrorKind::Param);
}

TEST_CASE("wasserstein: analytic distances and both forms") {
  const Eigen::MatrixXd I3 = Eigen::MatrixXd::Identity(3, 3);
  GaussianPoint a{Eigen::VectorXd::Zero(3), I3};
  GaussianPoint b{Eigen::VectorXd::Zero(3), 4.0 * I3};
  CHECK(std::abs(wasserstein_distance(a, a)) < 1e-12);
  CHECK(wasserstein_distance(a, b) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  Eigen::VectorXd mu(3);
  mu << 1, 2, 2;
  GaussianPoint c{mu, I3};
  CHECK(wasserstein_distance(a, c) == doctest::Approx(3.0).epsilon(1e-12));

  GaussianPoint d{mu, 4.0 * I3};  // mean term 3, Bures term sqrt(3)
  CHECK(wasserstein_distance(a, d, Config::DistForm::Paper) ==
        doctest::Approx(3.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(wasserstein_distance(a, d, Config::DistForm::L2) ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-12));

  SpdCloud cloud{a, b, d};
  const Eigen::MatrixXd dm = distance_matrix(cloud);
  CHECK(dm.rows() == 3);
  CHECK((dm - dm.transpose()).norm() < 1e-14);
  CHECK(dm.diagonal().norm() == 0.0);
  CHECK(dm(0, 2) == doctest::Approx(wasserstein_distance(a, d)));
  CHECK_THROWS_KIND(distance_matrix(SpdCloud{}), ErrorKind::Param);
}

// ---------------------------------------------------------------------------
// Histogram + dispersion
// ---------------------------------------------------------------------------

TEST_CASE("histogram: bin edges, overflow, conservation") {
  {
    const Histogram h = histogram({5.0}, 1.0, 200.0);
    REQUIRE(h.counts.size() == 201);
    CHECK(h.counts[5] == 1);
    CHECK(h.overflow_count == 0);
  }
  CHECK(histogram({10.0}, 10.0, 200.0).counts[1] == 1);  // left-closed bins
  CHECK(histogram({200.0}, 1.0, 200.0).counts[200] == 1);  // b itself lands in bin top
  {
    const Histogram h = histogram({250.0, -1.0}, 1.0, 200.0);
    CHECK(h.overflow_count == 2);
  }
  Rng rng(17);
  std::vector<double> vals(500);
  for (auto& v : vals) v = 250.0 * rng.uniform() - 20.0;
  const Histogram h = histogram(vals, 2.0, 180.0);
  long long total = h.overflow_count;
  for (long long c : h.counts) total += c;
  CHECK(total == 500);

  CHECK_THROWS_KIND(histogram({1.0}, 0.0, 200.0), ErrorKind::Param);
  CHECK_THROWS_KIND(histogram({1.0}, 1.0, 0.0), ErrorKind::Param);
  CHECK_THROWS_KIND(histogram({1.0}, 10.0, 5.0), ErrorKind::Param);
}

TEST_CASE("dispersion: exact small cases for both cur2 forms") {
  const std::vector<double> wsc{1.5, 2.5, 2.5, 3.5};
  const Histogram h = histogram(wsc, 1.0, 5.0);  // counts 0,1,2,1,0,0

  const DispersionPoint paper = dispersion(wsc, h, 0, Config::Cur2Form::Paper);
  REQUIRE(paper.defined);
  CHECK(paper.cur1 == doctest::Approx(2.5));  // even count: mean of middle two
  // mean over ALL bins above s: 4/5; squared deviations over j=1..5 sum to 2.8;
  // divided by |U2|-s-1 = 2.
  CHECK(paper.cur2 == doctest::Approx(1.4).epsilon(1e-12));

  const DispersionPoint corr = dispersion(wsc, h, 0, Config::Cur2Form::Corrected);
  REQUIRE(corr.defined);
  CHECK(corr.cur2 == doctest::Approx(38.0 / 27.0).epsilon(1e-12));  // both divisors |U2|=3

  // Odd-sized median and the s floor on U1.
  const std::vector<double> odd{1.0, 2.0, 3.0, 4.0};
  const Histogram h2 = histogram(odd, 1.0, 5.0);
  CHECK(dispersion({1.0, 2.0, 3.0}, histogram({1.0, 2.0, 3.0}, 1.0, 5.0), 0,
                   Config::Cur2Form::Paper)
            .cur1 == doctest::Approx(2.0));
  CHECK(dispersion(odd, h2, 2, Config::Cur2Form::Paper).cur1 ==
        doctest::Approx(3.0));  // U1 = {2,3,4} after the m*s cut
}

TEST_CASE("dispersion: undefined reasons and a zero-variance case") {
  {
    // Everything above b: U1 is empty.
    const std::vector<double> wsc{300.0, 400.0};
    const DispersionPoint p =
        dispersion(wsc, histogram(wsc, 1.0, 200.0), 0, Config::Cur2Form::Paper);
    CHECK_FALSE(p.defined);
    CHECK(p.reason.find("no curvature") != std::string::npos);
  }
  {
    // One occupied bin: |U2| = 1 <= s+1.
    const std::vector<double> wsc(10, 2.5);
    const DispersionPoint p =
        dispersion(wsc, histogram(wsc, 1.0, 200.0), 0, Config::Cur2Form::Paper);
    CHECK_FALSE(p.defined);
    CHECK(p.reason.find("occupied bins") != std::string::npos);
  }
  {
    // One count in every bin above s: deviations vanish, cur2 = 0.
    const std::vector<double> wsc{1.5, 2.5, 3.5};
    const Histogram h = histogram(wsc, 1.0, 3.0);  // bins 0..3, counts 0,1,1,1
    const DispersionPoint p = dispersion(wsc, h, 0, Config::Cur2Form::Paper);
    REQUIRE(p.defined);
    CHECK(p.cur1 == doctest::Approx(2.0));  // 3.5 > b drops out of U1
    CHECK(std::abs(p.cur2) < 1e-14);
  }
}

TEST_CASE("curvature sequence: per-point values and index in errors") {
  Rng rng(13);
  SpdCloud cloud;
  for (int i = 0; i < 5; ++i)
    cloud.push_back({Eigen::VectorXd::Zero(3), rng.spd(3)});
  const auto wsc = curvature_sequence(cloud);
  REQUIRE(wsc.size() == 5);
  for (int i = 0; i < 5; ++i)
    CHECK(wsc[i] == doctest::Approx(scalar_curvature(cloud[i].sigma)));

  cloud[1].sigma(0, 1) += 1.0;  // break symmetry
  try {
    curvature_sequence(cloud);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
    CHECK(std::string(e.what()).find("point 1") != std::string::npos);
  }
}

// ---------------------------------------------------------------------------
// Domain partition + evaluation
// ---------------------------------------------------------------------------

TEST_CASE("classify: representative points in every domain") {
  const double b = 200.0;
  auto lab = [&](double c1, double c2) { return classify(c1, c2, b).label; };

  CHECK(lab(100, 10) == Label::Normal);
  CHECK(lab(40, 80) == Label::AtrialPremature);
  CHECK(lab(15, 30) == Label::VentricularFlutter);
  CHECK(lab(15, 55) == Label::FusionVentricularNormal);
  CHECK(lab(15, 100) == Label::PrematureVentricular);
  CHECK(lab(15, 65) == Label::VentricularAbnormal);   // D22 and D23 overlap
  CHECK(lab(15, 45) == Label::VentricularAbnormal);   // D21 and D22 overlap
  CHECK(lab(5, 50) == Label::LeftBundleBranchBlock);
  CHECK(lab(5, 200) == Label::RightBundleBranchBlock);
  CHECK(lab(5, 120) == Label::BundleBranchBlock);     // D31 and D32 overlap
  CHECK(lab(150, 30) == Label::Unclassified);

  CHECK(classify(100, 10, b).domain == 0);
  CHECK(classify(40, 80, b).domain == 1);
  CHECK(classify(15, 30, b).domain == 2);
  CHECK(classify(5, 50, b).domain == 3);
  CHECK(classify(150, 30, b).domain == 4);
}

TEST_CASE("classify: bracket boundaries") {
  const double b = 200.0;
  CHECK(classify(25.0, 10, b).label == Label::VentricularFlutter);  // D2 is (10,25]
  CHECK(classify(25.0 + 1e-9, 10, b).label == Label::Normal);       // D0 is (25,b]
  CHECK(classify(b, 10, b).label == Label::Normal);                 // upper edge inclusive
  CHECK(classify(b + 0.001, 10, b).label == Label::Unclassified);
  CHECK(classify(26, 25.0, b).label == Label::Normal);              // cur2 = 25 stays D0
  CHECK(classify(26, 25.0 + 1e-9, b).label == Label::AtrialPremature);
  CHECK(classify(90.0, 30, b).label == Label::AtrialPremature);     // D1 is (25,90]
  CHECK(classify(90.0 + 1e-9, 30, b).label == Label::Unclassified);
  CHECK(classify(10.0 - 1e-9, 50, b).label == Label::LeftBundleBranchBlock);  // D3 = [0,10)

  // cur1 == 10 is assigned to neither D2 nor D3: flagged and unclassified.
  const ClassifyResult r = classify(10.0, 50, b);
  CHECK(r.label == Label::Unclassified);
  CHECK(r.domain == 4);
  CHECK(r.boundary_flag);
  CHECK_FALSE(classify(10.5, 50, b).boundary_flag);

  // A smaller b shrinks D0's right edge.
  CHECK(classify(160, 10, 150.0).label == Label::Unclassified);
  CHECK(classify(140, 10, 150.0).label == Label::Normal);
}

TEST_CASE("select_b: standard-beat max against the fixed cap") {
  CHECK(select_b(150.0, 3, 0.09) == doctest::Approx(150.0));
  CHECK(select_b(250.0, 3, 0.09) == doctest::Approx(200.0));
  CHECK(select_b(250.0, 2, 0.12) == doctest::Approx(50.0));  // 3*2*1/0.12
}

namespace {
ClassificationReport make_report(const std::vector<std::pair<Label, TrueLabel>>& rows) {
  ClassificationReport rep;
  rep.b = 200.0;
  long long i = 0;
  for (auto& [lab, tru] : rows) {
    BeatRow r;
    r.source_id = "t";
    r.beat_index = i++;
    r.disp.defined = true;
    r.label = lab;
    r.domain = label_group(lab) == 4 ? 4 : label_group(lab);
    r.truth = tru;
    rep.rows.push_back(r);
  }
  return rep;
}
}  // namespace

TEST_CASE("evaluate: perfect, degenerate, and missing-truth cases") {
  {
    const Metrics m = evaluate(make_report({{Label::Normal, TrueLabel::N},
                                            {Label::AtrialPremature, TrueLabel::AP},
                                            {Label::PrematureVentricular, TrueLabel::PVC},
                                            {Label::BundleBranchBlock, TrueLabel::LBBB}}));
    for (int j = 0; j < 5; ++j) {
      CHECK(m.tpr[j] == 1.0);  // group 4 is vacuously perfect
      CHECK(m.nrr[j] == 1.0);
    }
    CHECK(m.true_count[0] == 1);
    CHECK(m.pred_count[4] == 0);
  }
  {
    // Everything lands in Unclassified: zero recall, perfect noise removal
    // everywhere except the Unclassified group itself.
    const Metrics m = evaluate(make_report({{Label::Unclassified, TrueLabel::N},
                                            {Label::Unclassified, TrueLabel::AP},
                                            {Label::Unclassified, TrueLabel::PVC},
                                            {Label::Unclassified, TrueLabel::LBBB}}));
    for (int j = 0; j < 4; ++j) {
      CHECK(m.tpr[j] == 0.0);
      CHECK(m.nrr[j] == 1.0);
    }
    CHECK(m.tpr[4] == 1.0);
    CHECK(m.nrr[4] == 0.0);  // all four noise beats absorbed
  }
  {
    auto rep = make_report({{Label::Normal, TrueLabel::N}});
    rep.rows[0].truth = TrueLabel::Unlabeled;
    CHECK_THROWS_KIND(evaluate(rep), ErrorKind::Truth);
  }
}

TEST_CASE("evaluate: agrees exactly with a confusion-counting oracle") {
  const Label labels[] = {Label::Normal, Label::AtrialPremature, Label::VentricularFlutter,
                          Label::FusionVentricularNormal, Label::PrematureVentricular,
                          Label::VentricularAbnormal, Label::LeftBundleBranchBlock,
                          Label::RightBundleBranchBlock, Label::BundleBranchBlock,
                          Label::Unclassified};
  const TrueLabel truths[] = {TrueLabel::N, TrueLabel::LBBB, TrueLabel::RBBB,
                              TrueLabel::AP, TrueLabel::PVC, TrueLabel::FVN, TrueLabel::VF};
  Rng rng(2024);
  std::vector<std::pair<Label, TrueLabel>> rows;
  for (int i = 0; i < 200; ++i)
    rows.push_back({labels[static_cast<int>(rng.uniform() * 10)],
                    truths[static_cast<int>(rng.uniform() * 7)]});
  const Metrics m = evaluate(make_report(rows));

  for (int j = 0; j < 5; ++j) {
    long long q = 0, qo = 0, hit = 0, noise = 0;
    for (auto& [lab, tru] : rows) {
      const int pg = label_group(lab), tg = true_label_group(tru);
      if (tg == j) ++q;
      else ++qo;
      if (pg == j && tg == j) ++hit;
      if (pg == j && tg != j) ++noise;
    }
    const double tpr = q == 0 ? 1.0 : static_cast<double>(hit) / q;
    const double nrr = qo == 0 ? 1.0 : 1.0 - static_cast<double>(noise) / qo;
    CHECK(m.tpr[j] == tpr);  // exact: same integer arithmetic
    CHECK(m.nrr[j] == nrr);
  }
}

// ---------------------------------------------------------------------------
// Chi-squared quantile + confidence ellipse
// ---------------------------------------------------------------------------

TEST_CASE("chi2 quantile: reference values") {
  CHECK(chi2_quantile(0.95, 2) == doctest::Approx(5.991464547107979).epsilon(1e-9));
  CHECK(chi2_quantile(0.95, 1) == doctest::Approx(3.841458820694124).epsilon(1e-9));
  CHECK(chi2_quantile(0.99, 3) == doctest::Approx(11.344866730144371).epsilon(1e-9));
  CHECK(chi2_quantile(0.5, 2) == doctest::Approx(std::log(4.0)).epsilon(1e-9));
  CHECK_THROWS_KIND(chi2_quantile(0.0, 2), ErrorKind::Param);
  CHECK_THROWS_KIND(chi2_quantile(0.95, 0), ErrorKind::Param);
}

TEST_CASE("confidence ellipse: axes, angle, degeneracies") {
  std::vector<Eigen::Vector2d> pts = {{2, 0}, {-2, 0}, {0, 1}, {0, -1}};
  const ConfidenceEllipse e = confidence_ellipse(pts, 0.95);
  const double q = chi2_quantile(0.95, 2);
  CHECK(e.center.norm() < 1e-14);
  CHECK(e.semi_major == doctest::Approx(std::sqrt(q * 8.0 / 3.0)).epsilon(1e-10));
  CHECK(e.semi_minor == doctest::Approx(std::sqrt(q * 2.0 / 3.0)).epsilon(1e-10));
  CHECK(std::abs(e.angle) < 1e-12);
  CHECK(e.coverage == 0.95);

  // Rotating the cloud rotates the major axis with it.
  const double th = M_PI / 6.0;
  Eigen::Matrix2d R;
  R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  std::vector<Eigen::Vector2d> rot;
  for (auto& p : pts) rot.push_back(R * p);
  const ConfidenceEllipse er = confidence_ellipse(rot, 0.95);
  CHECK(er.angle == doctest::Approx(th).epsilon(1e-10));
  CHECK(er.semi_major == doctest::Approx(e.semi_major).epsilon(1e-10));

  // Shifting moves only the center.
  std::vector<Eigen::Vector2d> moved;
  for (auto& p : pts) moved.push_back(p + Eigen::Vector2d(5, 7));
  const ConfidenceEllipse em = confidence_ellipse(moved, 0.95);
  CHECK(em.center.x() == doctest::Approx(5.0));
  CHECK(em.center.y() == doctest::Approx(7.0));

  // Isotropic clouds have equal axes.
  std::vector<Eigen::Vector2d> iso = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const ConfidenceEllipse ei = confidence_ellipse(iso, 0.9);
  CHECK(ei.semi_major == doctest::Approx(ei.semi_minor).epsilon(1e-10));

  CHECK_THROWS_KIND(confidence_ellipse({{0, 0}, {1, 1}}, 0.95), ErrorKind::Param);
  CHECK_THROWS_KIND(confidence_ellipse(pts, 1.0), ErrorKind::Param);
  std::vector<Eigen::Vector2d> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_KIND(confidence_ellipse(line, 0.95), ErrorKind::Domain);
}
