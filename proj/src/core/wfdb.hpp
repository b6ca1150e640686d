#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace wscec {

// One signal line of a .hea header.
struct WfdbSignalSpec {
  std::string file;
  int format = 212;
  double gain = 200.0;   // adu per mV (0 in the file means the 200 default)
  int baseline = 0;      // adu value of 0 mV
  std::string units;
  std::string description;
};

struct WfdbHeader {
  std::string record;
  int nsig = 0;
  double fs = 250.0;     // WFDB default when the header omits it
  long long nsamp = 0;   // 0 when unspecified
  std::vector<WfdbSignalSpec> signals;
};

WfdbHeader parse_wfdb_header(const std::string& text);

// Raw integer samples per channel, round-robin interleaved in the data
// stream. Supports formats 212 and 16. nsamp == 0 means "as many as fit".
std::vector<std::vector<int>> decode_wfdb_data(const std::vector<std::uint8_t>& bytes,
                                               int format, int nsig, long long nsamp);

// Re-pack an interleaved sample stream; exact inverse of the decoders.
std::vector<std::uint8_t> encode_wfdb_212(const std::vector<int>& interleaved);
std::vector<std::uint8_t> encode_wfdb_16(const std::vector<int>& interleaved);

// header + data already in memory -> physical-unit record for one channel.
RawRecord wfdb_record_from_bytes(const std::string& header_text,
                                 const std::vector<std::uint8_t>& data, int channel);

// Reads <record>.hea, resolves the .dat next to it, extracts one channel.
RawRecord read_wfdb_record(const std::string& hea_path, int channel);

}  // namespace wscec
