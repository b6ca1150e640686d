#pragma once
#include <istream>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace wscec {

// One numeric value per row (or a chosen comma-separated column).
RawRecord read_csv_record(std::istream& in, double fs, int column,
                          const std::string& source_id);
RawRecord read_csv_record_file(const std::string& path, double fs, int column);

// Columnar beats bundle: header row then one row per beat,
// source_id,beat_index,r_index,src_peak_index,annotation,s000..s299.
// Samples are written with 17 significant digits so the bundle round-trips
// doubles exactly.
void write_beats_csv(std::ostream& out, const std::vector<Heartbeat>& beats);
void write_beats_csv_file(const std::string& path, const std::vector<Heartbeat>& beats);
std::vector<Heartbeat> read_beats_csv(std::istream& in);
std::vector<Heartbeat> read_beats_csv_file(const std::string& path);

// Sidecar ground truth: rows of sample_index,label.
struct Annotation {
  long long sample = 0;
  TrueLabel label = TrueLabel::Unlabeled;
};
std::vector<Annotation> read_annotations_csv(std::istream& in);
std::vector<Annotation> read_annotations_csv_file(const std::string& path);

// Attach the nearest annotation within +-window_s seconds of each beat's
// source R-peak; beats with no annotation in range stay Unlabeled.
void attach_annotations(std::vector<Heartbeat>& beats, std::vector<Annotation> anns,
                        double fs, double window_s);

}  // namespace wscec
