#pragma once
#include <Eigen/Dense>
#include <json.hpp>
#include <ostream>
#include <string>

#include "core/classifier.hpp"
#include "core/embed.hpp"
#include "core/features.hpp"

namespace wscec {

constexpr const char* kVersion = "0.1.0";

// Deterministic numeric formatting used by every text artifact.
std::string fmt_g(double v);

void write_report_csv(std::ostream& out, const ClassificationReport& rep);
// Inverse of write_report_csv (samples and intermediates are not persisted
// there, so only row-level fields come back).
ClassificationReport read_report_csv(std::istream& in);
ClassificationReport read_report_csv_file(const std::string& path);
void write_metrics_csv(std::ostream& out, const Metrics& m);
nlohmann::json report_json(const ClassificationReport& rep, const Metrics* metrics);
nlohmann::json manifest_json(const Config& cfg, const std::string& command,
                             const std::string& input, long long count,
                             const std::string& standard_id, double b);
nlohmann::json ellipse_json(const std::string& label, const ConfidenceEllipse& e);

void write_cloud_csv(std::ostream& out, const EuclideanCloud& cloud);
void write_hist_csv(std::ostream& out, const Histogram& h);
void write_hist_svg(std::ostream& out, const Histogram& h, const std::string& title);
void write_dmatrix_csv(std::ostream& out, const Eigen::MatrixXd& dm);
// 8-bit grayscale, min-max normalized: black = 0 distance, white = max.
void write_pgm(std::ostream& out, const Eigen::MatrixXd& dm);
void write_scatter_svg(std::ostream& out, const ClassificationReport& rep);

}  // namespace wscec
