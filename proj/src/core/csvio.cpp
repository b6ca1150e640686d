#include "core/csvio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wscec {
namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double_or_throw(const std::string& tok, long long line_no) {
  const std::string t = trim(tok);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || !end || *end != '\0')
    throw_parse("csv: non-numeric value '" + t + "' at line " + std::to_string(line_no));
  return v;
}

long long parse_ll_or_throw(const std::string& tok, long long line_no) {
  const std::string t = trim(tok);
  char* end = nullptr;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || !end || *end != '\0')
    throw_parse("csv: non-integer value '" + t + "' at line " + std::to_string(line_no));
  return v;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RawRecord read_csv_record(std::istream& in, double fs, int column,
                          const std::string& source_id) {
  if (!(fs > 0.0)) throw_param("csv record: sampling rate must be > 0");
  if (column < 0) throw_param("csv record: column must be >= 0");
  RawRecord rec;
  rec.fs = fs;
  rec.source_id = source_id;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (column >= static_cast<int>(cells.size()))
      throw_parse("csv: line " + std::to_string(line_no) + " has no column " +
                  std::to_string(column));
    rec.samples.push_back(parse_double_or_throw(cells[static_cast<size_t>(column)], line_no));
  }
  if (rec.samples.empty()) throw_parse("csv record: no samples in input");
  return rec;
}

RawRecord read_csv_record_file(const std::string& path, double fs, int column) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open csv record: " + path);
  const size_t slash = path.find_last_of('/');
  RawRecord rec = read_csv_record(in, fs, column,
                                  (slash == std::string::npos) ? path : path.substr(slash + 1));
  return rec;
}

void write_beats_csv(std::ostream& out, const std::vector<Heartbeat>& beats) {
  out << "source_id,beat_index,r_index,src_peak_index,annotation";
  for (int i = 0; i < kBeatLen; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), ",s%03d", i);
    out << buf;
  }
  out << "\n";
  for (size_t bi = 0; bi < beats.size(); ++bi) {
    const Heartbeat& hb = beats[bi];
    if (static_cast<int>(hb.samples.size()) != kBeatLen)
      throw_param("beats csv: beat " + std::to_string(bi) + " has " +
                  std::to_string(hb.samples.size()) + " samples, expected 300");
    out << hb.source_id << "," << bi << "," << hb.r_index << "," << hb.src_peak_index << ","
        << true_label_name(hb.annotation);
    for (double v : hb.samples) out << "," << fmt17(v);
    out << "\n";
  }
}

void write_beats_csv_file(const std::string& path, const std::vector<Heartbeat>& beats) {
  std::ofstream out(path);
  if (!out) throw_io("cannot write beats csv: " + path);
  write_beats_csv(out, beats);
  if (!out) throw_io("write failed: " + path);
}

std::vector<Heartbeat> read_beats_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw_parse("beats csv: empty file");
  if (line.rfind("source_id,", 0) != 0)
    throw_parse("beats csv: missing header row (expected 'source_id,...')");
  std::vector<Heartbeat> beats;
  long long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (static_cast<int>(cells.size()) != 5 + kBeatLen)
      throw_parse("beats csv: line " + std::to_string(line_no) + " has " +
                  std::to_string(cells.size()) + " columns, expected " +
                  std::to_string(5 + kBeatLen));
    Heartbeat hb;
    hb.source_id = trim(cells[0]);
    hb.r_index = static_cast<int>(parse_ll_or_throw(cells[2], line_no));
    hb.src_peak_index = parse_ll_or_throw(cells[3], line_no);
    const auto lbl = parse_true_label(trim(cells[4]));
    if (!lbl)
      throw_parse("beats csv: unknown annotation '" + trim(cells[4]) + "' at line " +
                  std::to_string(line_no));
    hb.annotation = *lbl;
    hb.samples.reserve(kBeatLen);
    for (int i = 0; i < kBeatLen; ++i)
      hb.samples.push_back(parse_double_or_throw(cells[static_cast<size_t>(5 + i)], line_no));
    if (hb.r_index < 0 || hb.r_index >= kBeatLen)
      throw_parse("beats csv: r_index out of range at line " + std::to_string(line_no));
    beats.push_back(std::move(hb));
  }
  return beats;
}

std::vector<Heartbeat> read_beats_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open beats csv: " + path);
  return read_beats_csv(in);
}

std::vector<Annotation> read_annotations_csv(std::istream& in) {
  std::vector<Annotation> anns;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (line_no == 1 && t.rfind("sample_index", 0) == 0) continue;  // optional header
    const auto cells = split_csv(t);
    if (cells.size() < 2)
      throw_parse("annotations csv: line " + std::to_string(line_no) + " needs sample_index,label");
    Annotation a;
    a.sample = parse_ll_or_throw(cells[0], line_no);
    const auto lbl = parse_true_label(trim(cells[1]));
    if (!lbl)
      throw_parse("annotations csv: unknown label '" + trim(cells[1]) + "' at line " +
                  std::to_string(line_no));
    a.label = *lbl;
    anns.push_back(a);
  }
  return anns;
}

std::vector<Annotation> read_annotations_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open annotations csv: " + path);
  return read_annotations_csv(in);
}

void attach_annotations(std::vector<Heartbeat>& beats, std::vector<Annotation> anns,
                        double fs, double window_s) {
  if (anns.empty()) return;
  if (!(fs > 0.0)) throw_param("attach_annotations: sampling rate must be > 0");
  std::sort(anns.begin(), anns.end(),
            [](const Annotation& a, const Annotation& b) { return a.sample < b.sample; });
  const long long window = std::llround(window_s * fs);
  for (Heartbeat& hb : beats) {
    if (hb.src_peak_index < 0) continue;
    auto it = std::lower_bound(anns.begin(), anns.end(), hb.src_peak_index,
                               [](const Annotation& a, long long v) { return a.sample < v; });
    long long best_gap = window + 1;
    const Annotation* best = nullptr;
    if (it != anns.end() && std::llabs(it->sample - hb.src_peak_index) < best_gap) {
      best_gap = std::llabs(it->sample - hb.src_peak_index);
      best = &*it;
    }
    if (it != anns.begin()) {
      const Annotation& prev = *(it - 1);
      if (std::llabs(prev.sample - hb.src_peak_index) < best_gap) best = &prev;
    }
    if (best) hb.annotation = best->label;
  }
}

}  // namespace wscec
