#ifndef WSCEC_H
#define WSCEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WSCEC_API __declspec(dllexport)
#else
#define WSCEC_API __attribute__((visibility("default")))
#endif

/* Every fallible call returns a status; a human-readable message for the most
 * recent failure on the calling thread is available via wscec_last_error(). */
typedef enum wscec_status {
  WSCEC_OK = 0,
  WSCEC_ERR_IO = 1,     /* unreadable or unwritable files */
  WSCEC_ERR_PARSE = 2,  /* malformed headers, CSV, or data streams */
  WSCEC_ERR_PARAM = 3,  /* parameter precondition violated */
  WSCEC_ERR_DOMAIN = 4, /* mathematical domain error (non-SPD input, ...) */
  WSCEC_ERR_STATE = 5   /* required state absent (e.g. ground truth missing) */
} wscec_status;

typedef struct wscec_config wscec_config; /* pipeline parameter set */
typedef struct wscec_beats wscec_beats;   /* segmented 300-sample heartbeats */
typedef struct wscec_report wscec_report; /* per-beat labels + dispersion */

WSCEC_API const char* wscec_version(void);
WSCEC_API const char* wscec_last_error(void);

/* ---- configuration -------------------------------------------------- */

WSCEC_API wscec_config* wscec_config_new(void);
WSCEC_API void wscec_config_free(wscec_config* cfg);
/* Keys: l, tau, d, k, m, s, epsilon, covariance_normalization (sum|mean),
 * cur2_form (paper|corrected), distance_form (paper|l2), cutoff_hz,
 * butter_order, no_filter, jobs, seed. Unknown key -> WSCEC_ERR_PARAM. */
WSCEC_API wscec_status wscec_config_set(wscec_config* cfg, const char* key,
                                        const char* value);
WSCEC_API wscec_status wscec_config_get(const wscec_config* cfg, const char* key,
                                        char* buf, size_t buflen);

/* ---- ingest --------------------------------------------------------- */

/* Reads <record>.hea + its .dat, filters, finds R-peaks, segments. */
WSCEC_API wscec_status wscec_beats_from_wfdb(const char* hea_path, int channel,
                                             const wscec_config* cfg,
                                             wscec_beats** out);
/* One value per row (or column `column`). already_segmented != 0 treats the
 * file as a single 300-sample beat and skips detection. */
WSCEC_API wscec_status wscec_beats_from_csv(const char* csv_path, double fs,
                                            int column, int already_segmented,
                                            const wscec_config* cfg,
                                            wscec_beats** out);
/* Bundled synthetic exemplars; names is a comma list drawn from
 * normal,ap,vf,fvn,pvc,lbbb,rbbb - NULL or "" means all seven. */
WSCEC_API wscec_status wscec_beats_from_fixtures(const char* names,
                                                 wscec_beats** out);
/* Re-load a beats bundle written by wscec_beats_write_csv. */
WSCEC_API wscec_status wscec_beats_from_bundle(const char* beats_csv_path,
                                               wscec_beats** out);

/* Ground truth sidecar (sample_index,label), attached to the nearest beat
 * within +-window_s seconds of its source R-peak. */
WSCEC_API wscec_status wscec_beats_load_annotations(wscec_beats* beats,
                                                    const char* csv_path,
                                                    double window_s);

WSCEC_API long long wscec_beats_count(const wscec_beats* beats);
WSCEC_API wscec_status wscec_beats_source_id(const wscec_beats* beats,
                                             long long index, char* buf,
                                             size_t buflen);
/* Copies the 300 samples of one beat into buf. */
WSCEC_API wscec_status wscec_beats_samples(const wscec_beats* beats, long long index,
                                           double buf[300]);
/* Writes the columnar bundle (beats.csv + manifest.json) into out_dir. */
WSCEC_API wscec_status wscec_beats_write(const wscec_beats* beats,
                                         const char* out_dir,
                                         const wscec_config* cfg);
WSCEC_API void wscec_beats_free(wscec_beats* beats);

/* ---- classification ------------------------------------------------- */

/* standard selects the histogram-range beat: a decimal index into the batch,
 * or "fixture:<name>"; NULL/"" means index 0. keep_intermediates retains
 * per-beat clouds so report writing can emit clouds/dmatrix/hist. */
WSCEC_API wscec_status wscec_classify(const wscec_beats* beats, const char* standard,
                                      const wscec_config* cfg, int keep_intermediates,
                                      wscec_report** out);

WSCEC_API long long wscec_report_count(const wscec_report* rep);
WSCEC_API double wscec_report_b(const wscec_report* rep);
/* defined==0 leaves cur1/cur2 untouched. label_buf/truth_buf may be NULL. */
WSCEC_API wscec_status wscec_report_row(const wscec_report* rep, long long index,
                                        int* defined, double* cur1, double* cur2,
                                        int* domain, char* label_buf, size_t label_len,
                                        char* truth_buf, size_t truth_len);
/* emit is a comma list of report,clouds,dmatrix,hist (NULL/"" = report). */
WSCEC_API wscec_status wscec_report_write(const wscec_report* rep, const char* out_dir,
                                          const char* emit);
/* tpr/nrr are filled per group (Normal, Atrial, Ventricular,
 * BundleBranchBlock, Unclassified); WSCEC_ERR_STATE without ground truth. */
WSCEC_API wscec_status wscec_report_evaluate(const wscec_report* rep, double tpr[5],
                                             double nrr[5]);
WSCEC_API wscec_status wscec_report_metrics_csv(const wscec_report* rep,
                                                const char* path);
WSCEC_API void wscec_report_free(wscec_report* rep);

/* Standalone evaluation of a persisted report.csv; metrics_csv_path and
 * tpr/nrr may be NULL when not wanted. */
WSCEC_API wscec_status wscec_evaluate_file(const char* report_csv_path,
                                           const char* metrics_csv_path,
                                           double tpr[5], double nrr[5]);

/* ---- granular helpers ----------------------------------------------- */

/* Dispersion feature of one 300-sample beat with histogram bound b. */
WSCEC_API wscec_status wscec_feature(const double samples[300],
                                     const wscec_config* cfg, double b,
                                     int* defined, double* cur1, double* cur2);
/* Rectangle-partition label of one dispersion point. */
WSCEC_API wscec_status wscec_classify_point(double cur1, double cur2, double b,
                                            char* label_buf, size_t label_len,
                                            int* domain);
/* Wasserstein scalar curvature of a dense row-major n x n SPD matrix. */
WSCEC_API wscec_status wscec_scalar_curvature(const double* matrix, int n,
                                              double* rho);

/* ---- selftest ------------------------------------------------------- */

/* Prints one line per invariant to stdout; returns 0 iff all pass. */
WSCEC_API int wscec_selftest(uint64_t seed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WSCEC_H */
