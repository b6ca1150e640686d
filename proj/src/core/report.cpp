#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "core/error.hpp"

namespace wscec {
namespace {

using json = nlohmann::json;

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return out;
}

json config_json(const Config& c) {
  return json{{"l", c.l},
              {"tau", c.tau},
              {"d", c.d},
              {"k", c.k},
              {"m", c.m},
              {"s", c.s},
              {"epsilon", c.epsilon},
              {"covariance_normalization", c.get("covariance_normalization")},
              {"cur2_form", c.get("cur2_form")},
              {"distance_form", c.get("distance_form")},
              {"cutoff_hz", c.cutoff_hz},
              {"butter_order", c.butter_order},
              {"no_filter", c.no_filter},
              {"jobs", c.jobs},
              {"seed", c.seed}};
}

}  // namespace

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_report_csv(std::ostream& out, const ClassificationReport& rep) {
  out << "source_id,beat_index,defined,cur1,cur2,label,domain,truth,note\n";
  for (const BeatRow& r : rep.rows) {
    out << sanitize(r.source_id) << "," << r.beat_index << "," << (r.disp.defined ? 1 : 0) << ",";
    if (r.disp.defined)
      out << fmt_g(r.disp.cur1) << "," << fmt_g(r.disp.cur2);
    else
      out << ",";
    out << "," << label_name(r.label) << ",D" << r.domain << "," << true_label_name(r.truth)
        << "," << sanitize(r.note) << "\n";
  }
}

ClassificationReport read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw_parse("report csv: empty file");
  if (line.rfind("source_id,beat_index,defined,", 0) != 0)
    throw_parse("report csv: unexpected header row");
  ClassificationReport rep;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(cur);
    if (cells.size() < 9)
      throw_parse("report csv: line " + std::to_string(line_no) + " has too few columns");
    BeatRow row;
    row.source_id = cells[0];
    row.beat_index = std::strtoll(cells[1].c_str(), nullptr, 10);
    row.disp.defined = cells[2] == "1";
    if (row.disp.defined) {
      row.disp.cur1 = std::strtod(cells[3].c_str(), nullptr);
      row.disp.cur2 = std::strtod(cells[4].c_str(), nullptr);
    }
    const auto lbl = parse_label(cells[5]);
    if (!lbl)
      throw_parse("report csv: unknown label '" + cells[5] + "' at line " +
                  std::to_string(line_no));
    row.label = *lbl;
    if (cells[6].size() < 2 || cells[6][0] != 'D')
      throw_parse("report csv: bad domain '" + cells[6] + "' at line " + std::to_string(line_no));
    row.domain = std::atoi(cells[6].c_str() + 1);
    const auto truth = parse_true_label(cells[7]);
    if (!truth)
      throw_parse("report csv: unknown truth '" + cells[7] + "' at line " +
                  std::to_string(line_no));
    row.truth = *truth;
    row.note = cells[8];
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ClassificationReport read_report_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open report csv: " + path);
  return read_report_csv(in);
}

void write_metrics_csv(std::ostream& out, const Metrics& m) {
  out << "group,original_size,classified_size,true_positive,noise_in,noise_total,TPR,NRR\n";
  for (int j = 0; j < 5; ++j) {
    out << group_name(j) << "," << m.true_count[j] << "," << m.pred_count[j] << ","
        << m.hit_count[j] << "," << m.noise_hit[j] << "," << m.noise_den[j] << ","
        << fmt_g(m.tpr[j]) << "," << fmt_g(m.nrr[j]) << "\n";
  }
}

json report_json(const ClassificationReport& rep, const Metrics* metrics) {
  json rows = json::array();
  for (const BeatRow& r : rep.rows) {
    json row{{"source_id", r.source_id},
             {"beat_index", r.beat_index},
             {"defined", r.disp.defined},
             {"label", label_name(r.label)},
             {"domain", r.domain},
             {"truth", true_label_name(r.truth)}};
    if (r.disp.defined) {
      row["cur1"] = r.disp.cur1;
      row["cur2"] = r.disp.cur2;
    }
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  long long tally[5] = {0, 0, 0, 0, 0};
  for (const BeatRow& r : rep.rows) ++tally[label_group(r.label)];
  json tallies;
  for (int j = 0; j < 5; ++j) tallies[group_name(j)] = tally[j];
  json doc{{"version", kVersion},
           {"b", rep.b},
           {"standard", rep.standard_id},
           {"parameters", config_json(rep.params)},
           {"count", rep.rows.size()},
           {"tallies", tallies},
           {"beats", rows}};
  if (metrics) {
    json table = json::array();
    for (int j = 0; j < 5; ++j)
      table.push_back(json{{"group", group_name(j)},
                           {"original_size", metrics->true_count[j]},
                           {"classified_size", metrics->pred_count[j]},
                           {"TPR", metrics->tpr[j]},
                           {"NRR", metrics->nrr[j]}});
    doc["metrics"] = table;
  }
  return doc;
}

json manifest_json(const Config& cfg, const std::string& command, const std::string& input,
                   long long count, const std::string& standard_id, double b) {
  return json{{"tool", "wscec"},
              {"version", kVersion},
              {"command", command},
              {"input", input},
              {"count", count},
              {"standard", standard_id},
              {"b", b},
              {"parameters", config_json(cfg)}};
}

json ellipse_json(const std::string& label, const ConfidenceEllipse& e) {
  return json{{"label", label},
              {"center", {e.center(0), e.center(1)}},
              {"semi_major", e.semi_major},
              {"semi_minor", e.semi_minor},
              {"angle_rad", e.angle},
              {"coverage", e.coverage}};
}

void write_cloud_csv(std::ostream& out, const EuclideanCloud& cloud) {
  if (cloud.empty()) return;
  const long d = cloud[0].size();
  for (long c = 0; c < d; ++c) out << (c ? "," : "") << "x" << c;
  out << "\n";
  for (const auto& p : cloud) {
    for (long c = 0; c < d; ++c) out << (c ? "," : "") << fmt_g(p(c));
    out << "\n";
  }
}

void write_hist_csv(std::ostream& out, const Histogram& h) {
  out << "bin_low,bin_high,count\n";
  for (size_t j = 0; j < h.counts.size(); ++j)
    out << fmt_g(h.m * static_cast<double>(j)) << "," << fmt_g(h.m * static_cast<double>(j + 1))
        << "," << h.counts[j] << "\n";
  out << fmt_g(h.m * static_cast<double>(h.counts.size())) << ",inf," << h.overflow_count << "\n";
}

void write_hist_svg(std::ostream& out, const Histogram& h, const std::string& title) {
  const double W = 900, H = 420, ml = 50, mb = 40, mt = 30, mr = 20;
  long long peak = 1;
  for (long long c : h.counts) peak = std::max(peak, c);
  const double pw = W - ml - mr, ph = H - mt - mb;
  const double bw = pw / static_cast<double>(h.counts.size());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<text x=\"" << fmt_g(W / 2) << "\" y=\"18\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"13\">"
      << title << "</text>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << fmt_g(H - mb) << "\" x2=\"" << fmt_g(W - mr)
      << "\" y2=\"" << fmt_g(H - mb) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << fmt_g(H - mb) << "\" stroke=\"black\"/>\n";
  for (size_t j = 0; j < h.counts.size(); ++j) {
    if (h.counts[j] == 0) continue;
    const double bh = ph * static_cast<double>(h.counts[j]) / static_cast<double>(peak);
    out << "<rect x=\"" << fmt_g(ml + bw * static_cast<double>(j)) << "\" y=\""
        << fmt_g(H - mb - bh) << "\" width=\"" << fmt_g(std::max(bw, 0.5)) << "\" height=\""
        << fmt_g(bh) << "\" fill=\"#4878cf\"/>\n";
  }
  out << "<text x=\"" << fmt_g(W - mr) << "\" y=\"" << fmt_g(H - 8)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">bins 0.."
      << (h.counts.size() - 1) << " (width " << fmt_g(h.m) << "), overflow " << h.overflow_count
      << ", peak " << peak << "</text>\n";
  out << "</svg>\n";
}

void write_dmatrix_csv(std::ostream& out, const Eigen::MatrixXd& dm) {
  for (long i = 0; i < dm.rows(); ++i) {
    for (long j = 0; j < dm.cols(); ++j) out << (j ? "," : "") << fmt_g(dm(i, j));
    out << "\n";
  }
}

void write_pgm(std::ostream& out, const Eigen::MatrixXd& dm) {
  const double lo = dm.minCoeff(), hi = dm.maxCoeff();
  const double span = (hi > lo) ? hi - lo : 1.0;
  out << "P2\n" << dm.cols() << " " << dm.rows() << "\n255\n";
  for (long i = 0; i < dm.rows(); ++i) {
    for (long j = 0; j < dm.cols(); ++j) {
      const int g = static_cast<int>(std::lround(255.0 * (dm(i, j) - lo) / span));
      out << (j ? " " : "") << g;
    }
    out << "\n";
  }
}

void write_scatter_svg(std::ostream& out, const ClassificationReport& rep) {
  // Dispersion plane: cur1 right, cur2 up; unbounded rectangles clipped at the
  // view ceiling.
  const double c1max = std::max(210.0, rep.b * 1.05), c2max = 310.0;
  const double W = 840, H = 640, ml = 55, mb = 45, mt = 25, mr = 15;
  const double pw = W - ml - mr, ph = H - mt - mb;
  auto X = [&](double c1) { return ml + pw * c1 / c1max; };
  auto Y = [&](double c2) { return H - mb - ph * std::min(c2, c2max) / c2max; };
  auto rect = [&](double x0, double x1, double y0, double y1, const char* fill) {
    out << "<rect x=\"" << fmt_g(X(x0)) << "\" y=\"" << fmt_g(Y(y1)) << "\" width=\""
        << fmt_g(X(x1) - X(x0)) << "\" height=\"" << fmt_g(Y(y0) - Y(y1)) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.25\" stroke=\"" << fill << "\" stroke-width=\"1\"/>\n";
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  rect(25, rep.b, 0, 25, "#2ca02c");         // D0
  rect(25, 90, 25, c2max, "#ff7f0e");        // D1
  rect(10, 25, 0, 50, "#d62728");            // D21
  rect(10, 25, 40, 70, "#9467bd");           // D22
  rect(10, 25, 60, c2max, "#8c564b");        // D23
  rect(0, 10, 0, 140, "#1f77b4");            // D31
  rect(0, 10, 100, c2max, "#17becf");        // D32
  out << "<line x1=\"" << ml << "\" y1=\"" << fmt_g(H - mb) << "\" x2=\"" << fmt_g(W - mr)
      << "\" y2=\"" << fmt_g(H - mb) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << fmt_g(H - mb) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt_g(W / 2) << "\" y=\"" << fmt_g(H - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">cur1</text>\n";
  out << "<text x=\"14\" y=\"" << fmt_g(H / 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
      << fmt_g(H / 2) << ")\">cur2</text>\n";
  static const char* group_color[5] = {"#2ca02c", "#ff7f0e", "#d62728", "#1f77b4", "#7f7f7f"};
  for (const BeatRow& r : rep.rows) {
    if (!r.disp.defined) continue;
    out << "<circle cx=\"" << fmt_g(X(std::min(r.disp.cur1, c1max))) << "\" cy=\""
        << fmt_g(Y(r.disp.cur2)) << "\" r=\"3\" fill=\"" << group_color[label_group(r.label)]
        << "\"><title>" << sanitize(r.source_id) << " #" << r.beat_index << " "
        << label_name(r.label) << "</title></circle>\n";
  }
  out << "</svg>\n";
}

}  // namespace wscec
