#include "wscec/wscec.h"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "core/classifier.hpp"
#include "core/csvio.hpp"
#include "core/error.hpp"
#include "core/features.hpp"
#include "core/filter.hpp"
#include "core/fixtures.hpp"
#include "core/pipeline.hpp"
#include "core/report.hpp"
#include "core/rpeaks.hpp"
#include "core/segment.hpp"
#include "core/selftest.hpp"
#include "core/spd.hpp"
#include "core/wfdb.hpp"

struct wscec_config {
  wscec::Config cfg;
};

struct wscec_beats {
  std::vector<wscec::Heartbeat> beats;
  double fs = 360.0;
  std::string source_desc;
};

struct wscec_report {
  wscec::ClassificationReport rep;
  std::vector<wscec::BeatFeatures> feats;  // nonempty iff keep_intermediates
  std::string source_desc;
};

namespace {

thread_local std::string g_last_error;

wscec_status status_of(const wscec::Error& e) {
  switch (e.kind()) {
    case wscec::ErrorKind::Io: return WSCEC_ERR_IO;
    case wscec::ErrorKind::Parse: return WSCEC_ERR_PARSE;
    case wscec::ErrorKind::Param: return WSCEC_ERR_PARAM;
    case wscec::ErrorKind::Domain:
    case wscec::ErrorKind::Undefined: return WSCEC_ERR_DOMAIN;
    case wscec::ErrorKind::Truth: return WSCEC_ERR_STATE;
  }
  return WSCEC_ERR_STATE;
}

template <typename F>
wscec_status guarded(F&& fn) {
  try {
    fn();
    return WSCEC_OK;
  } catch (const wscec::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WSCEC_ERR_STATE;
  }
}

wscec_status fail_param(const std::string& msg) {
  g_last_error = msg;
  return WSCEC_ERR_PARAM;
}

void copy_out(const std::string& s, char* buf, size_t buflen) {
  if (!buf || buflen == 0) return;
  const size_t n = std::min(buflen - 1, s.size());
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

// filter -> peak detection -> segmentation with the configured knobs.
std::vector<wscec::Heartbeat> ingest_record(const wscec::RawRecord& rec,
                                            const wscec::Config& cfg) {
  wscec::RawRecord work = cfg.no_filter
                              ? rec
                              : wscec::lowpass_filter(rec, cfg.cutoff_hz, cfg.butter_order);
  const auto peaks =
      wscec::detect_r_peaks(work, cfg.thr_frac, cfg.roll_win_s, cfg.refractory_s);
  return wscec::segment_heartbeats(work, peaks, cfg.pre_360, cfg.post_360, nullptr);
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(*p))) {
      cur += *p;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) wscec::throw_io("cannot write: " + path);
  out << content;
  if (!out) wscec::throw_io("write failed: " + path);
}

}  // namespace

extern "C" {

const char* wscec_version(void) { return wscec::kVersion; }

const char* wscec_last_error(void) { return g_last_error.c_str(); }

wscec_config* wscec_config_new(void) { return new wscec_config(); }

void wscec_config_free(wscec_config* cfg) { delete cfg; }

wscec_status wscec_config_set(wscec_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail_param("config_set: null argument");
  return guarded([&] {
    if (!cfg->cfg.set(key, value))
      wscec::throw_param(std::string("config: unknown key ") + key);
  });
}

wscec_status wscec_config_get(const wscec_config* cfg, const char* key, char* buf,
                              size_t buflen) {
  if (!cfg || !key || !buf) return fail_param("config_get: null argument");
  return guarded([&] { copy_out(cfg->cfg.get(key), buf, buflen); });
}

wscec_status wscec_beats_from_wfdb(const char* hea_path, int channel,
                                   const wscec_config* cfg, wscec_beats** out) {
  if (!hea_path || !cfg || !out) return fail_param("beats_from_wfdb: null argument");
  return guarded([&] {
    const wscec::RawRecord rec = wscec::read_wfdb_record(hea_path, channel);
    auto handle = std::make_unique<wscec_beats>();
    handle->beats = ingest_record(rec, cfg->cfg);
    handle->fs = rec.fs;
    handle->source_desc = std::string("wfdb:") + hea_path + "#ch" + std::to_string(channel);
    *out = handle.release();
  });
}

wscec_status wscec_beats_from_csv(const char* csv_path, double fs, int column,
                                  int already_segmented, const wscec_config* cfg,
                                  wscec_beats** out) {
  if (!csv_path || !cfg || !out) return fail_param("beats_from_csv: null argument");
  return guarded([&] {
    const wscec::RawRecord rec = wscec::read_csv_record_file(csv_path, fs, column);
    auto handle = std::make_unique<wscec_beats>();
    handle->fs = fs;
    handle->source_desc = std::string("csv:") + csv_path;
    if (already_segmented) {
      if (static_cast<int>(rec.samples.size()) != wscec::kBeatLen)
        wscec::throw_param("already-segmented input must have exactly 300 samples, got " +
                           std::to_string(rec.samples.size()));
      wscec::Heartbeat hb;
      hb.samples = rec.samples;
      hb.r_index = cfg->cfg.pre_360;
      // The file is its own source record, so annotations index into it.
      hb.src_peak_index = cfg->cfg.pre_360;
      hb.source_id = rec.source_id;
      handle->beats.push_back(std::move(hb));
    } else {
      handle->beats = ingest_record(rec, cfg->cfg);
    }
    *out = handle.release();
  });
}

wscec_status wscec_beats_from_fixtures(const char* names, wscec_beats** out) {
  if (!out) return fail_param("beats_from_fixtures: null argument");
  return guarded([&] {
    auto handle = std::make_unique<wscec_beats>();
    std::vector<std::string> list = split_list(names);
    if (list.empty()) list = wscec::fixture_names();
    for (const auto& name : list) handle->beats.push_back(wscec::fixture_beat(name));
    handle->source_desc = "fixtures:" + (names && *names ? std::string(names) : "all");
    *out = handle.release();
  });
}

wscec_status wscec_beats_from_bundle(const char* beats_csv_path, wscec_beats** out) {
  if (!beats_csv_path || !out) return fail_param("beats_from_bundle: null argument");
  return guarded([&] {
    auto handle = std::make_unique<wscec_beats>();
    handle->beats = wscec::read_beats_csv_file(beats_csv_path);
    handle->source_desc = std::string("bundle:") + beats_csv_path;
    *out = handle.release();
  });
}

wscec_status wscec_beats_load_annotations(wscec_beats* beats, const char* csv_path,
                                          double window_s) {
  if (!beats || !csv_path) return fail_param("load_annotations: null argument");
  return guarded([&] {
    wscec::attach_annotations(beats->beats, wscec::read_annotations_csv_file(csv_path),
                              beats->fs, window_s);
  });
}

long long wscec_beats_count(const wscec_beats* beats) {
  return beats ? static_cast<long long>(beats->beats.size()) : -1;
}

wscec_status wscec_beats_source_id(const wscec_beats* beats, long long index, char* buf,
                                   size_t buflen) {
  if (!beats || !buf) return fail_param("beats_source_id: null argument");
  if (index < 0 || index >= static_cast<long long>(beats->beats.size()))
    return fail_param("beats_source_id: index out of range");
  copy_out(beats->beats[static_cast<size_t>(index)].source_id, buf, buflen);
  return WSCEC_OK;
}

wscec_status wscec_beats_samples(const wscec_beats* beats, long long index,
                                 double buf[300]) {
  if (!beats || !buf) return fail_param("beats_samples: null argument");
  if (index < 0 || index >= static_cast<long long>(beats->beats.size()))
    return fail_param("beats_samples: index out of range");
  const auto& s = beats->beats[static_cast<size_t>(index)].samples;
  std::memcpy(buf, s.data(), sizeof(double) * wscec::kBeatLen);
  return WSCEC_OK;
}

wscec_status wscec_beats_write(const wscec_beats* beats, const char* out_dir,
                               const wscec_config* cfg) {
  if (!beats || !out_dir || !cfg) return fail_param("beats_write: null argument");
  return guarded([&] {
    std::filesystem::create_directories(out_dir);
    const std::string dir = std::string(out_dir) + "/";
    wscec::write_beats_csv_file(dir + "beats.csv", beats->beats);
    const auto manifest =
        wscec::manifest_json(cfg->cfg, "ingest", beats->source_desc,
                             static_cast<long long>(beats->beats.size()), "", 0.0);
    write_text_file(dir + "manifest.json", manifest.dump(2) + "\n");
  });
}

void wscec_beats_free(wscec_beats* beats) { delete beats; }

wscec_status wscec_classify(const wscec_beats* beats, const char* standard,
                            const wscec_config* cfg, int keep_intermediates,
                            wscec_report** out) {
  if (!beats || !cfg || !out) return fail_param("classify: null argument");
  return guarded([&] {
    wscec::Heartbeat std_beat;
    const std::string spec = standard ? standard : "";
    if (spec.empty() || spec.find_first_not_of("0123456789") == std::string::npos) {
      const long long idx = spec.empty() ? 0 : std::strtoll(spec.c_str(), nullptr, 10);
      if (idx < 0 || idx >= static_cast<long long>(beats->beats.size()))
        wscec::throw_param("standard beat index " + std::to_string(idx) +
                           " out of range (batch holds " +
                           std::to_string(beats->beats.size()) + ")");
      std_beat = beats->beats[static_cast<size_t>(idx)];
    } else if (spec.rfind("fixture:", 0) == 0) {
      std_beat = wscec::fixture_beat(spec.substr(8));
    } else {
      wscec::throw_param("standard beat spec must be an index or fixture:<name>, got '" +
                         spec + "'");
    }
    wscec::RunOutput run =
        wscec::wscec_run(beats->beats, std_beat, cfg->cfg, keep_intermediates != 0);
    auto handle = std::make_unique<wscec_report>();
    handle->rep = std::move(run.report);
    handle->feats = std::move(run.features);
    handle->source_desc = beats->source_desc;
    *out = handle.release();
  });
}

long long wscec_report_count(const wscec_report* rep) {
  return rep ? static_cast<long long>(rep->rep.rows.size()) : -1;
}

double wscec_report_b(const wscec_report* rep) { return rep ? rep->rep.b : -1.0; }

wscec_status wscec_report_row(const wscec_report* rep, long long index, int* defined,
                              double* cur1, double* cur2, int* domain, char* label_buf,
                              size_t label_len, char* truth_buf, size_t truth_len) {
  if (!rep) return fail_param("report_row: null report");
  if (index < 0 || index >= static_cast<long long>(rep->rep.rows.size()))
    return fail_param("report_row: index out of range");
  const wscec::BeatRow& row = rep->rep.rows[static_cast<size_t>(index)];
  if (defined) *defined = row.disp.defined ? 1 : 0;
  if (row.disp.defined) {
    if (cur1) *cur1 = row.disp.cur1;
    if (cur2) *cur2 = row.disp.cur2;
  }
  if (domain) *domain = row.domain;
  if (label_buf) copy_out(wscec::label_name(row.label), label_buf, label_len);
  if (truth_buf) copy_out(wscec::true_label_name(row.truth), truth_buf, truth_len);
  return WSCEC_OK;
}

wscec_status wscec_report_write(const wscec_report* rep, const char* out_dir,
                                const char* emit) {
  if (!rep || !out_dir) return fail_param("report_write: null argument");
  return guarded([&] {
    auto flags = split_list(emit);
    if (flags.empty()) flags.push_back("report");
    bool want_report = false, want_clouds = false, want_dmatrix = false, want_hist = false;
    for (const auto& f : flags) {
      if (f == "report") want_report = true;
      else if (f == "clouds") want_clouds = true;
      else if (f == "dmatrix") want_dmatrix = true;
      else if (f == "hist") want_hist = true;
      else wscec::throw_param("unknown emit flag '" + f + "'");
    }
    if ((want_clouds || want_dmatrix || want_hist) && rep->feats.empty())
      wscec::throw_param("emit " + std::string(emit) +
                         " requires classify with keep_intermediates");
    std::filesystem::create_directories(out_dir);
    const std::string dir = std::string(out_dir) + "/";
    if (want_report) {
      {
        std::ofstream out(dir + "report.csv", std::ios::binary);
        if (!out) wscec::throw_io("cannot write: " + dir + "report.csv");
        wscec::write_report_csv(out, rep->rep);
      }
      const wscec::Metrics* metrics_ptr = nullptr;
      wscec::Metrics metrics;
      try {
        metrics = wscec::evaluate(rep->rep);
        metrics_ptr = &metrics;
      } catch (const wscec::Error&) {
        // no ground truth: the JSON simply omits the metrics table
      }
      write_text_file(dir + "report.json",
                      wscec::report_json(rep->rep, metrics_ptr).dump(2) + "\n");
      write_text_file(dir + "manifest.json",
                      wscec::manifest_json(rep->rep.params, "classify", rep->source_desc,
                                           static_cast<long long>(rep->rep.rows.size()),
                                           rep->rep.standard_id, rep->rep.b)
                              .dump(2) +
                          "\n");
      {
        std::ofstream out(dir + "scatter.svg", std::ios::binary);
        if (!out) wscec::throw_io("cannot write: " + dir + "scatter.svg");
        wscec::write_scatter_svg(out, rep->rep);
      }
    }
    char name[64];
    for (size_t i = 0; i < rep->feats.size(); ++i) {
      const wscec::BeatFeatures& f = rep->feats[i];
      if (want_clouds) {
        std::snprintf(name, sizeof(name), "beat_%06zu_cloud.csv", i);
        std::ofstream out(dir + name, std::ios::binary);
        wscec::write_cloud_csv(out, f.cloud);
      }
      if (want_dmatrix && !f.spd.empty()) {
        const Eigen::MatrixXd dm =
            wscec::distance_matrix(f.spd, rep->rep.params.dist_form);
        std::snprintf(name, sizeof(name), "beat_%06zu_dmatrix.csv", i);
        {
          std::ofstream out(dir + name, std::ios::binary);
          wscec::write_dmatrix_csv(out, dm);
        }
        std::snprintf(name, sizeof(name), "beat_%06zu_dmatrix.pgm", i);
        std::ofstream out(dir + name, std::ios::binary);
        wscec::write_pgm(out, dm);
      }
      if (want_hist) {
        std::snprintf(name, sizeof(name), "beat_%06zu_hist.csv", i);
        {
          std::ofstream out(dir + name, std::ios::binary);
          wscec::write_hist_csv(out, f.hist);
        }
        std::snprintf(name, sizeof(name), "beat_%06zu_hist.svg", i);
        std::ofstream out(dir + name, std::ios::binary);
        wscec::write_hist_svg(out, f.hist,
                              rep->rep.rows[i].source_id + " #" + std::to_string(i));
      }
    }
  });
}

wscec_status wscec_report_evaluate(const wscec_report* rep, double tpr[5], double nrr[5]) {
  if (!rep) return fail_param("report_evaluate: null report");
  return guarded([&] {
    const wscec::Metrics m = wscec::evaluate(rep->rep);
    for (int j = 0; j < 5; ++j) {
      if (tpr) tpr[j] = m.tpr[j];
      if (nrr) nrr[j] = m.nrr[j];
    }
  });
}

wscec_status wscec_report_metrics_csv(const wscec_report* rep, const char* path) {
  if (!rep || !path) return fail_param("report_metrics_csv: null argument");
  return guarded([&] {
    const wscec::Metrics m = wscec::evaluate(rep->rep);
    std::ofstream out(path, std::ios::binary);
    if (!out) wscec::throw_io("cannot write: " + std::string(path));
    wscec::write_metrics_csv(out, m);
  });
}

void wscec_report_free(wscec_report* rep) { delete rep; }

wscec_status wscec_evaluate_file(const char* report_csv_path, const char* metrics_csv_path,
                                 double tpr[5], double nrr[5]) {
  if (!report_csv_path) return fail_param("evaluate_file: null report path");
  return guarded([&] {
    const wscec::ClassificationReport rep = wscec::read_report_csv_file(report_csv_path);
    const wscec::Metrics m = wscec::evaluate(rep);
    if (metrics_csv_path) {
      std::ofstream out(metrics_csv_path, std::ios::binary);
      if (!out) wscec::throw_io("cannot write: " + std::string(metrics_csv_path));
      wscec::write_metrics_csv(out, m);
    }
    for (int j = 0; j < 5; ++j) {
      if (tpr) tpr[j] = m.tpr[j];
      if (nrr) nrr[j] = m.nrr[j];
    }
  });
}

wscec_status wscec_feature(const double samples[300], const wscec_config* cfg, double b,
                           int* defined, double* cur1, double* cur2) {
  if (!samples || !cfg || !defined) return fail_param("feature: null argument");
  return guarded([&] {
    wscec::Heartbeat hb;
    hb.samples.assign(samples, samples + wscec::kBeatLen);
    hb.r_index = cfg->cfg.pre_360;
    const wscec::BeatFeatures f = wscec::feature_extract(hb, cfg->cfg, b);
    *defined = f.disp.defined ? 1 : 0;
    if (f.disp.defined) {
      if (cur1) *cur1 = f.disp.cur1;
      if (cur2) *cur2 = f.disp.cur2;
    }
  });
}

wscec_status wscec_classify_point(double cur1, double cur2, double b, char* label_buf,
                                  size_t label_len, int* domain) {
  return guarded([&] {
    const wscec::ClassifyResult r = wscec::classify(cur1, cur2, b);
    if (label_buf) copy_out(wscec::label_name(r.label), label_buf, label_len);
    if (domain) *domain = r.domain;
  });
}

wscec_status wscec_scalar_curvature(const double* matrix, int n, double* rho) {
  if (!matrix || !rho) return fail_param("scalar_curvature: null argument");
  if (n < 2) return fail_param("scalar_curvature: n must be >= 2");
  return guarded([&] {
    Eigen::MatrixXd S(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) S(i, j) = matrix[i * n + j];
    *rho = wscec::scalar_curvature(S);
  });
}

int wscec_selftest(uint64_t seed) {
  const wscec::SelftestResult res = wscec::selftest(seed, std::cout);
  return res.ok() ? 0 : 1;
}

}  // extern "C"
