// Consumes the shared library exactly as an external program would: only the
// installed header, opaque handles, and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "wscec/wscec.h"

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("wscec_capi_" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string str(const char* sub = nullptr) const {
    return sub ? (path / sub).string() : path.string();
  }
};

struct ConfigGuard {
  wscec_config* cfg = wscec_config_new();
  ~ConfigGuard() { wscec_config_free(cfg); }
};

}  // namespace

TEST_CASE("capi: version and config access") {
  CHECK(std::strcmp(wscec_version(), "0.1.0") == 0);

  ConfigGuard g;
  char buf[64];
  REQUIRE(wscec_config_get(g.cfg, "k", buf, sizeof(buf)) == WSCEC_OK);
  CHECK(std::strcmp(buf, "20") == 0);
  REQUIRE(wscec_config_set(g.cfg, "k", "12") == WSCEC_OK);
  REQUIRE(wscec_config_get(g.cfg, "k", buf, sizeof(buf)) == WSCEC_OK);
  CHECK(std::strcmp(buf, "12") == 0);

  CHECK(wscec_config_set(g.cfg, "nonsense", "1") == WSCEC_ERR_PARAM);
  CHECK(std::strlen(wscec_last_error()) > 0);
  CHECK(wscec_config_set(nullptr, "k", "1") == WSCEC_ERR_PARAM);
  CHECK(wscec_config_get(g.cfg, "k", nullptr, 0) == WSCEC_ERR_PARAM);
}

TEST_CASE("capi: fixtures, classification, rows, evaluation") {
  ConfigGuard g;
  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_fixtures(nullptr, &beats) == WSCEC_OK);
  REQUIRE(beats != nullptr);
  CHECK(wscec_beats_count(beats) == 7);

  char sid[64];
  REQUIRE(wscec_beats_source_id(beats, 0, sid, sizeof(sid)) == WSCEC_OK);
  CHECK(std::string(sid) == "fixture:normal");
  CHECK(wscec_beats_source_id(beats, 99, sid, sizeof(sid)) == WSCEC_ERR_PARAM);

  double samples[300];
  REQUIRE(wscec_beats_samples(beats, 0, samples) == WSCEC_OK);
  double peak = 0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  CHECK(peak > 0.5);  // the QRS deflection is present
  CHECK(wscec_beats_samples(beats, -1, samples) == WSCEC_ERR_PARAM);

  wscec_report* rep = nullptr;
  REQUIRE(wscec_classify(beats, nullptr, g.cfg, 0, &rep) == WSCEC_OK);
  CHECK(wscec_report_count(rep) == 7);
  CHECK(wscec_report_b(rep) == 200.0);

  int defined = 0, domain = -1;
  double cur1 = 0, cur2 = 0;
  char label[48], truth[24];
  REQUIRE(wscec_report_row(rep, 0, &defined, &cur1, &cur2, &domain, label,
                           sizeof(label), truth, sizeof(truth)) == WSCEC_OK);
  CHECK(defined == 1);
  CHECK(cur1 == doctest::Approx(63.917).epsilon(1e-3));
  CHECK(cur2 == doctest::Approx(8.296).epsilon(1e-2));
  CHECK(domain == 0);
  CHECK(std::string(label) == "Normal");
  CHECK(std::string(truth) == "N");
  REQUIRE(wscec_report_row(rep, 6, &defined, &cur1, &cur2, &domain, label,
                           sizeof(label), truth, sizeof(truth)) == WSCEC_OK);
  CHECK(std::string(label) == "RightBundleBranchBlock");
  CHECK(wscec_report_row(rep, 7, &defined, &cur1, &cur2, &domain, nullptr, 0,
                         nullptr, 0) == WSCEC_ERR_PARAM);

  double tpr[5], nrr[5];
  REQUIRE(wscec_report_evaluate(rep, tpr, nrr) == WSCEC_OK);
  for (int j = 0; j < 5; ++j) {
    CHECK(tpr[j] == 1.0);
    CHECK(nrr[j] == 1.0);
  }

  wscec_report_free(rep);
  wscec_beats_free(beats);
}

TEST_CASE("capi: named fixture subset and the standard selector") {
  ConfigGuard g;
  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_fixtures("vf,pvc", &beats) == WSCEC_OK);
  CHECK(wscec_beats_count(beats) == 2);

  wscec_report* rep = nullptr;
  // The histogram range still comes from the normal exemplar.
  REQUIRE(wscec_classify(beats, "fixture:normal", g.cfg, 0, &rep) == WSCEC_OK);
  char label[48];
  int defined = 0, domain = -1;
  double c1, c2;
  REQUIRE(wscec_report_row(rep, 0, &defined, &c1, &c2, &domain, label,
                           sizeof(label), nullptr, 0) == WSCEC_OK);
  CHECK(std::string(label) == "VentricularFlutter");
  wscec_report_free(rep);

  wscec_report* rep2 = nullptr;
  CHECK(wscec_classify(beats, "5", g.cfg, 0, &rep2) == WSCEC_ERR_PARAM);  // out of range
  CHECK(wscec_classify(beats, "fixture:nope", g.cfg, 0, &rep2) == WSCEC_ERR_PARAM);
  wscec_beats_free(beats);

  wscec_beats* none = nullptr;
  CHECK(wscec_beats_from_fixtures("unknown_name", &none) == WSCEC_ERR_PARAM);
}

TEST_CASE("capi: report writing and standalone file evaluation") {
  ConfigGuard g;
  TempDir tmp;
  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_fixtures(nullptr, &beats) == WSCEC_OK);

  wscec_report* rep = nullptr;
  REQUIRE(wscec_classify(beats, "0", g.cfg, 1, &rep) == WSCEC_OK);
  REQUIRE(wscec_report_write(rep, tmp.str("out").c_str(), "report,hist") == WSCEC_OK);
  for (const char* f : {"report.csv", "report.json", "manifest.json", "scatter.svg",
                        "beat_000000_hist.csv", "beat_000006_hist.svg"})
    CHECK_MESSAGE(std::filesystem::exists(tmp.path / "out" / f), f);

  CHECK(wscec_report_write(rep, tmp.str("out2").c_str(), "report,bogus") ==
        WSCEC_ERR_PARAM);

  REQUIRE(wscec_report_metrics_csv(rep, tmp.str("metrics.csv").c_str()) == WSCEC_OK);
  CHECK(std::filesystem::exists(tmp.path / "metrics.csv"));

  double tpr[5], nrr[5];
  REQUIRE(wscec_evaluate_file((tmp.path / "out" / "report.csv").string().c_str(),
                              tmp.str("m2.csv").c_str(), tpr, nrr) == WSCEC_OK);
  for (int j = 0; j < 5; ++j) CHECK(tpr[j] == 1.0);
  CHECK(std::filesystem::exists(tmp.path / "m2.csv"));
  CHECK(wscec_evaluate_file(tmp.str("absent.csv").c_str(), nullptr, tpr, nrr) ==
        WSCEC_ERR_IO);

  wscec_report_free(rep);

  // Without keep_intermediates the per-beat artifacts are refused.
  wscec_report* lean = nullptr;
  REQUIRE(wscec_classify(beats, nullptr, g.cfg, 0, &lean) == WSCEC_OK);
  CHECK(wscec_report_write(lean, tmp.str("out3").c_str(), "hist") == WSCEC_ERR_PARAM);
  wscec_report_free(lean);
  wscec_beats_free(beats);
}

TEST_CASE("capi: bundle round trip preserves classification bits") {
  ConfigGuard g;
  TempDir tmp;
  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_fixtures(nullptr, &beats) == WSCEC_OK);
  REQUIRE(wscec_beats_write(beats, tmp.str("bundle").c_str(), g.cfg) == WSCEC_OK);
  CHECK(std::filesystem::exists(tmp.path / "bundle" / "beats.csv"));
  CHECK(std::filesystem::exists(tmp.path / "bundle" / "manifest.json"));

  wscec_beats* loaded = nullptr;
  REQUIRE(wscec_beats_from_bundle((tmp.path / "bundle" / "beats.csv").string().c_str(),
                                  &loaded) == WSCEC_OK);
  REQUIRE(wscec_beats_count(loaded) == 7);

  double a[300], b[300];
  for (long long i = 0; i < 7; ++i) {
    REQUIRE(wscec_beats_samples(beats, i, a) == WSCEC_OK);
    REQUIRE(wscec_beats_samples(loaded, i, b) == WSCEC_OK);
    for (int j = 0; j < 300; ++j) CHECK(a[j] == b[j]);  // 17-digit text is lossless
  }

  wscec_report* r1 = nullptr;
  wscec_report* r2 = nullptr;
  REQUIRE(wscec_classify(beats, nullptr, g.cfg, 0, &r1) == WSCEC_OK);
  REQUIRE(wscec_classify(loaded, nullptr, g.cfg, 0, &r2) == WSCEC_OK);
  for (long long i = 0; i < 7; ++i) {
    int d1, d2, dm1, dm2;
    double x1, y1, x2, y2;
    REQUIRE(wscec_report_row(r1, i, &d1, &x1, &y1, &dm1, nullptr, 0, nullptr, 0) ==
            WSCEC_OK);
    REQUIRE(wscec_report_row(r2, i, &d2, &x2, &y2, &dm2, nullptr, 0, nullptr, 0) ==
            WSCEC_OK);
    CHECK(d1 == d2);
    CHECK(x1 == x2);
    CHECK(y1 == y2);
    CHECK(dm1 == dm2);
  }
  wscec_report_free(r1);
  wscec_report_free(r2);
  wscec_beats_free(loaded);
  wscec_beats_free(beats);

  wscec_beats* nope = nullptr;
  CHECK(wscec_beats_from_bundle(tmp.str("missing.csv").c_str(), &nope) == WSCEC_ERR_IO);
}

TEST_CASE("capi: csv ingest with annotations sidecar") {
  ConfigGuard g;
  TempDir tmp;

  // One already-segmented beat copied straight from the normal fixture.
  wscec_beats* fix = nullptr;
  REQUIRE(wscec_beats_from_fixtures("normal", &fix) == WSCEC_OK);
  double samples[300];
  REQUIRE(wscec_beats_samples(fix, 0, samples) == WSCEC_OK);
  wscec_beats_free(fix);
  {
    std::ofstream out(tmp.str("beat.csv"));
    out.precision(17);
    for (double v : samples) out << v << "\n";
  }

  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_csv(tmp.str("beat.csv").c_str(), 360.0, 0, 1, g.cfg,
                               &beats) == WSCEC_OK);
  REQUIRE(wscec_beats_count(beats) == 1);

  // Unannotated: classification works, evaluation is a state error.
  wscec_report* rep = nullptr;
  REQUIRE(wscec_classify(beats, "fixture:normal", g.cfg, 0, &rep) == WSCEC_OK);
  char label[48];
  int defined, domain;
  double c1, c2;
  REQUIRE(wscec_report_row(rep, 0, &defined, &c1, &c2, &domain, label, sizeof(label),
                           nullptr, 0) == WSCEC_OK);
  CHECK(std::string(label) == "Normal");
  double tpr[5], nrr[5];
  CHECK(wscec_report_evaluate(rep, tpr, nrr) == WSCEC_ERR_STATE);
  CHECK(std::string(wscec_last_error()).find("ground-truth") != std::string::npos);
  wscec_report_free(rep);

  // Attach a sidecar annotation at the beat's R sample and retry.
  {
    std::ofstream out(tmp.str("ann.csv"));
    out << "sample_index,label\n100,N\n";
  }
  REQUIRE(wscec_beats_load_annotations(beats, tmp.str("ann.csv").c_str(), 0.15) ==
          WSCEC_OK);
  wscec_report* rep2 = nullptr;
  REQUIRE(wscec_classify(beats, "fixture:normal", g.cfg, 0, &rep2) == WSCEC_OK);
  REQUIRE(wscec_report_evaluate(rep2, tpr, nrr) == WSCEC_OK);
  CHECK(tpr[0] == 1.0);
  wscec_report_free(rep2);
  wscec_beats_free(beats);

  CHECK(wscec_beats_from_csv(tmp.str("absent.csv").c_str(), 360.0, 0, 0, g.cfg,
                             &beats) == WSCEC_ERR_IO);
}

TEST_CASE("capi: granular helpers") {
  ConfigGuard g;
  wscec_beats* beats = nullptr;
  REQUIRE(wscec_beats_from_fixtures("normal", &beats) == WSCEC_OK);
  double samples[300];
  REQUIRE(wscec_beats_samples(beats, 0, samples) == WSCEC_OK);
  wscec_beats_free(beats);

  int defined = 0;
  double cur1 = 0, cur2 = 0;
  REQUIRE(wscec_feature(samples, g.cfg, 200.0, &defined, &cur1, &cur2) == WSCEC_OK);
  CHECK(defined == 1);
  CHECK(cur1 == doctest::Approx(63.917).epsilon(1e-3));

  char label[48];
  int domain = -1;
  REQUIRE(wscec_classify_point(100.0, 10.0, 200.0, label, sizeof(label), &domain) ==
          WSCEC_OK);
  CHECK(std::string(label) == "Normal");
  CHECK(domain == 0);
  REQUIRE(wscec_classify_point(15.0, 65.0, 200.0, label, sizeof(label), &domain) ==
          WSCEC_OK);
  CHECK(std::string(label) == "VentricularAbnormal");
  CHECK(domain == 2);

  const double eye2[4] = {1.0, 0.0, 0.0, 1.0};
  double rho = 0.0;
  REQUIRE(wscec_scalar_curvature(eye2, 2, &rho) == WSCEC_OK);
  CHECK(rho == doctest::Approx(1.5).epsilon(1e-12));
  const double bad[4] = {1.0, 0.0, 0.0, -1.0};
  CHECK(wscec_scalar_curvature(bad, 2, &rho) == WSCEC_ERR_DOMAIN);
  CHECK(wscec_scalar_curvature(nullptr, 2, &rho) == WSCEC_ERR_PARAM);
}

TEST_CASE("capi: selftest entry point") {
  CHECK(wscec_selftest(42) == 0);
}
