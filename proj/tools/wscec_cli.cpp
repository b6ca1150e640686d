#include <CLI11.hpp>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "wscec/wscec.h"

namespace {

// Contract: 0 success, 1 selftest failure, 2 input error, 3 missing ground truth.
int exit_code_for(wscec_status st) {
  if (st == WSCEC_OK) return 0;
  if (st == WSCEC_ERR_STATE) return 3;
  return 2;
}

int bail(wscec_status st, const char* what) {
  std::fprintf(stderr, "wscec: %s: %s\n", what, wscec_last_error());
  return exit_code_for(st);
}

struct ConfigGuard {
  wscec_config* cfg = wscec_config_new();
  ~ConfigGuard() { wscec_config_free(cfg); }
};

struct BeatsGuard {
  wscec_beats* beats = nullptr;
  ~BeatsGuard() { wscec_beats_free(beats); }
};

struct ReportGuard {
  wscec_report* rep = nullptr;
  ~ReportGuard() { wscec_report_free(rep); }
};

struct InputOpts {
  std::string input;
  std::string format = "wfdb";
  int channel = 0;
  double fs = 360.0;
  int column = 0;
  bool already_segmented = false;
  std::string annotations;
  double annot_window = 0.15;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--input", in.input, "input path (record, csv, or beats bundle)")
      ->required();
  cmd->add_option("--format", in.format, "wfdb|csv|fixtures|bundle")
      ->check(CLI::IsMember({"wfdb", "csv", "fixtures", "bundle"}));
  cmd->add_option("--channel", in.channel, "wfdb signal channel");
  cmd->add_option("--fs", in.fs, "sampling rate for csv input (Hz)");
  cmd->add_option("--column", in.column, "csv column holding the samples");
  cmd->add_flag("--already-segmented", in.already_segmented,
                "csv input is a single 300-sample beat");
  cmd->add_option("--annotations", in.annotations, "ground-truth csv (sample_index,label)");
  cmd->add_option("--annot-window", in.annot_window,
                  "annotation attach window around each R-peak (seconds)");
}

// Maps CLI flags onto config keys; values applied only when the flag was given.
struct ParamOpts {
  std::map<std::string, std::string> kv;

  void add_flags(CLI::App* cmd) {
    auto opt = [this, cmd](const char* flag, const char* key, const char* help) {
      cmd->add_option_function<std::string>(
          flag, [this, key](const std::string& v) { kv[key] = v; }, help);
    };
    opt("--l", "l", "window length");
    opt("--tau", "tau", "window stride");
    opt("--d", "d", "embedding dimension");
    opt("--k", "k", "kNN neighborhood size");
    opt("--m", "m", "histogram bin width");
    opt("--s", "s", "histogram start index");
    opt("--epsilon", "epsilon", "histogram range parameter");
    opt("--cur2-form", "cur2_form", "paper|corrected");
    opt("--cov-norm", "covariance_normalization", "sum|mean");
    opt("--distance-form", "distance_form", "paper|l2");
    opt("--cutoff", "cutoff_hz", "lowpass cutoff (Hz)");
    opt("--jobs", "jobs", "worker threads (0 = all cores)");
    opt("--seed", "seed", "seed for seeded diagnostics");
    cmd->add_flag_function(
        "--no-filter", [this](std::int64_t) { kv["no_filter"] = "1"; },
        "skip the lowpass stage");
  }

  wscec_status apply(wscec_config* cfg) const {
    for (const auto& [key, value] : kv) {
      const wscec_status st = wscec_config_set(cfg, key.c_str(), value.c_str());
      if (st != WSCEC_OK) return st;
    }
    return WSCEC_OK;
  }
};

wscec_status make_beats(const InputOpts& in, const wscec_config* cfg, wscec_beats** out) {
  if (in.format == "wfdb")
    return wscec_beats_from_wfdb(in.input.c_str(), in.channel, cfg, out);
  if (in.format == "csv")
    return wscec_beats_from_csv(in.input.c_str(), in.fs, in.column,
                                in.already_segmented ? 1 : 0, cfg, out);
  if (in.format == "fixtures")
    return wscec_beats_from_fixtures(in.input == "all" ? "" : in.input.c_str(), out);
  return wscec_beats_from_bundle(in.input.c_str(), out);
}

wscec_status load_annotations(const InputOpts& in, wscec_beats* beats) {
  if (in.annotations.empty()) return WSCEC_OK;
  return wscec_beats_load_annotations(beats, in.annotations.c_str(), in.annot_window);
}

const char* kGroups[5] = {"Normal", "Atrial", "Ventricular", "BundleBranchBlock",
                          "Unclassified"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wasserstein scalar curvature ECG classifier"};
  app.require_subcommand(1);

  InputOpts ingest_in, classify_in;
  ParamOpts ingest_pp, classify_pp, selftest_pp;
  std::string ingest_out = "out", classify_out = "out", eval_out, eval_input;
  std::string standard_spec, emit = "report";

  CLI::App* c_ingest = app.add_subcommand("ingest", "segment a record into beats");
  add_input_flags(c_ingest, ingest_in);
  ingest_pp.add_flags(c_ingest);
  c_ingest->add_option("--out", ingest_out, "output directory");

  CLI::App* c_classify = app.add_subcommand("classify", "run the full batch classifier");
  add_input_flags(c_classify, classify_in);
  classify_pp.add_flags(c_classify);
  c_classify->add_option("--out", classify_out, "output directory");
  c_classify->add_option("--standard-beat", standard_spec,
                         "standard beat: batch index or fixture:<name>");
  c_classify->add_option("--emit", emit, "comma list of report,clouds,dmatrix,hist");

  CLI::App* c_eval = app.add_subcommand("evaluate", "score a persisted report");
  c_eval->add_option("--input", eval_input, "report.csv (or its directory)")->required();
  c_eval->add_option("--out", eval_out, "metrics csv path (optional)");

  CLI::App* c_selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest_pp.add_flags(c_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_selftest->parsed()) {
    unsigned long long seed = 42;
    const auto it = selftest_pp.kv.find("seed");
    if (it != selftest_pp.kv.end()) seed = std::strtoull(it->second.c_str(), nullptr, 10);
    return wscec_selftest(seed);
  }

  if (c_ingest->parsed()) {
    ConfigGuard cfg;
    wscec_status st = ingest_pp.apply(cfg.cfg);
    if (st != WSCEC_OK) return bail(st, "config");
    BeatsGuard beats;
    st = make_beats(ingest_in, cfg.cfg, &beats.beats);
    if (st != WSCEC_OK) return bail(st, "ingest");
    st = load_annotations(ingest_in, beats.beats);
    if (st != WSCEC_OK) return bail(st, "annotations");
    st = wscec_beats_write(beats.beats, ingest_out.c_str(), cfg.cfg);
    if (st != WSCEC_OK) return bail(st, "write");
    std::printf("ingested %lld beats -> %s\n", wscec_beats_count(beats.beats),
                ingest_out.c_str());
    return 0;
  }

  if (c_classify->parsed()) {
    ConfigGuard cfg;
    wscec_status st = classify_pp.apply(cfg.cfg);
    if (st != WSCEC_OK) return bail(st, "config");
    BeatsGuard beats;
    st = make_beats(classify_in, cfg.cfg, &beats.beats);
    if (st != WSCEC_OK) return bail(st, "ingest");
    st = load_annotations(classify_in, beats.beats);
    if (st != WSCEC_OK) return bail(st, "annotations");
    const bool keep = emit.find("clouds") != std::string::npos ||
                      emit.find("dmatrix") != std::string::npos ||
                      emit.find("hist") != std::string::npos;
    ReportGuard rep;
    st = wscec_classify(beats.beats, standard_spec.c_str(), cfg.cfg, keep ? 1 : 0,
                        &rep.rep);
    if (st != WSCEC_OK) return bail(st, "classify");
    st = wscec_report_write(rep.rep, classify_out.c_str(), emit.c_str());
    if (st != WSCEC_OK) return bail(st, "write");
    const long long n = wscec_report_count(rep.rep);
    std::map<std::string, long long> tally;
    for (long long i = 0; i < n; ++i) {
      char label[64];
      int defined = 0, domain = 4;
      wscec_report_row(rep.rep, i, &defined, nullptr, nullptr, &domain, label,
                       sizeof(label), nullptr, 0);
      ++tally[label];
    }
    std::printf("classified %lld beats (b = %.12g) -> %s\n", n, wscec_report_b(rep.rep),
                classify_out.c_str());
    for (const auto& [label, count] : tally)
      std::printf("  %-24s %lld\n", label.c_str(), count);
    return 0;
  }

  // evaluate
  std::string path = eval_input;
  if (path.find(".csv") == std::string::npos) path += "/report.csv";
  double tpr[5], nrr[5];
  const wscec_status st = wscec_evaluate_file(
      path.c_str(), eval_out.empty() ? nullptr : eval_out.c_str(), tpr, nrr);
  if (st != WSCEC_OK) return bail(st, "evaluate");
  std::printf("%-20s %10s %10s\n", "group", "TPR", "NRR");
  for (int j = 0; j < 5; ++j)
    std::printf("%-20s %10.4f %10.4f\n", kGroups[j], tpr[j], nrr[j]);
  if (!eval_out.empty()) std::printf("metrics -> %s\n", eval_out.c_str());
  return 0;
}
