#include "core/wfdb.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wscec {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtoll(s.c_str(), &end, 10);
  return end && *end == '\0';
}

bool parse_num(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end && *end == '\0';
}

int sign_extend_12(int v) { return (v >= 2048) ? v - 4096 : v; }

}  // namespace

WfdbHeader parse_wfdb_header(const std::string& text) {
  WfdbHeader h;
  std::istringstream in(text);
  std::string line;
  bool have_record_line = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (!have_record_line) {
      if (toks.size() < 2) throw_parse("wfdb header: record line needs name and signal count");
      h.record = toks[0].substr(0, toks[0].find('/'));  // strip segment count
      long long nsig = 0;
      if (!parse_int(toks[1], nsig) || nsig < 1)
        throw_parse("wfdb header: bad signal count '" + toks[1] + "'");
      h.nsig = static_cast<int>(nsig);
      if (toks.size() >= 3) {
        const std::string fs_tok = toks[2].substr(0, toks[2].find('/'));  // drop counter rate
        double fs = 0.0;
        if (!parse_num(fs_tok, fs) || fs <= 0.0)
          throw_parse("wfdb header: bad sampling rate '" + toks[2] + "'");
        h.fs = fs;
      }
      if (toks.size() >= 4) {
        long long ns = 0;
        if (!parse_int(toks[3], ns) || ns < 0)
          throw_parse("wfdb header: bad sample count '" + toks[3] + "'");
        h.nsamp = ns;
      }
      have_record_line = true;
      continue;
    }
    if (static_cast<int>(h.signals.size()) == h.nsig) break;  // info lines follow
    if (toks.size() < 2) throw_parse("wfdb header: signal line needs file and format");
    WfdbSignalSpec sig;
    sig.file = toks[0];
    // Format code may carry xN/:N/+N modifiers; the leading integer is the code.
    {
      size_t pos = 0;
      while (pos < toks[1].size() && std::isdigit(static_cast<unsigned char>(toks[1][pos]))) ++pos;
      long long fmt = 0;
      if (pos == 0 || !parse_int(toks[1].substr(0, pos), fmt))
        throw_parse("wfdb header: bad format code '" + toks[1] + "'");
      if (fmt != 212 && fmt != 16)
        throw_parse("wfdb header: unsupported format code " + std::to_string(fmt));
      sig.format = static_cast<int>(fmt);
      if (pos < toks[1].size())
        throw_parse("wfdb header: format modifiers not supported: '" + toks[1] + "'");
    }
    bool explicit_baseline = false;
    if (toks.size() >= 3) {
      // gain token: GAIN, GAIN(BASELINE), GAIN/units, GAIN(BASELINE)/units
      std::string g = toks[2];
      const size_t slash = g.find('/');
      if (slash != std::string::npos) {
        sig.units = g.substr(slash + 1);
        g = g.substr(0, slash);
      }
      const size_t open = g.find('(');
      if (open != std::string::npos) {
        const size_t close = g.find(')', open);
        if (close == std::string::npos)
          throw_parse("wfdb header: unbalanced baseline in '" + toks[2] + "'");
        long long base = 0;
        if (!parse_int(g.substr(open + 1, close - open - 1), base))
          throw_parse("wfdb header: bad baseline in '" + toks[2] + "'");
        sig.baseline = static_cast<int>(base);
        explicit_baseline = true;
        g = g.substr(0, open);
      }
      double gain = 0.0;
      if (!parse_num(g, gain)) throw_parse("wfdb header: bad gain '" + toks[2] + "'");
      sig.gain = (gain == 0.0) ? 200.0 : gain;
    }
    if (toks.size() >= 5 && !explicit_baseline) {
      long long adc_zero = 0;
      if (parse_int(toks[4], adc_zero)) sig.baseline = static_cast<int>(adc_zero);
    }
    // Optional trailing description = everything after the 8th token.
    if (toks.size() >= 9) {
      std::string desc = toks[8];
      for (size_t t = 9; t < toks.size(); ++t) desc += " " + toks[t];
      sig.description = desc;
    }
    h.signals.push_back(sig);
  }
  if (!have_record_line) throw_parse("wfdb header: empty header");
  if (static_cast<int>(h.signals.size()) != h.nsig)
    throw_parse("wfdb header: expected " + std::to_string(h.nsig) + " signal lines, found " +
                std::to_string(h.signals.size()));
  return h;
}

std::vector<std::vector<int>> decode_wfdb_data(const std::vector<std::uint8_t>& bytes,
                                               int format, int nsig, long long nsamp) {
  if (nsig < 1) throw_param("wfdb decode: signal count must be >= 1");
  const long long want_total = (nsamp > 0) ? nsamp * nsig : -1;
  std::vector<int> stream;
  if (format == 212) {
    if (want_total >= 0) {
      const long long need = (want_total + 1) / 2 * 3;
      if (static_cast<long long>(bytes.size()) < need)
        throw_parse("wfdb decode: format 212 data truncated (have " +
                    std::to_string(bytes.size()) + " bytes, need " + std::to_string(need) + ")");
    }
    const size_t triplets = bytes.size() / 3;
    stream.reserve(triplets * 2);
    for (size_t t = 0; t < triplets; ++t) {
      const int b0 = bytes[3 * t], b1 = bytes[3 * t + 1], b2 = bytes[3 * t + 2];
      stream.push_back(sign_extend_12(((b1 & 0x0F) << 8) | b0));
      stream.push_back(sign_extend_12(((b1 & 0xF0) << 4) | b2));
    }
  } else if (format == 16) {
    if (want_total >= 0 && static_cast<long long>(bytes.size()) < want_total * 2)
      throw_parse("wfdb decode: format 16 data truncated");
    const size_t n = bytes.size() / 2;
    stream.reserve(n);
    for (size_t t = 0; t < n; ++t) {
      const int lo = bytes[2 * t], hi = bytes[2 * t + 1];
      int v = (hi << 8) | lo;
      if (v >= 32768) v -= 65536;
      stream.push_back(v);
    }
  } else {
    throw_parse("wfdb decode: unsupported format code " + std::to_string(format));
  }
  long long per_chan = static_cast<long long>(stream.size()) / nsig;
  if (nsamp > 0) per_chan = nsamp;
  std::vector<std::vector<int>> out(static_cast<size_t>(nsig));
  for (auto& ch : out) ch.reserve(static_cast<size_t>(per_chan));
  for (long long i = 0; i < per_chan * nsig; ++i)
    out[static_cast<size_t>(i % nsig)].push_back(stream[static_cast<size_t>(i)]);
  return out;
}

std::vector<std::uint8_t> encode_wfdb_212(const std::vector<int>& interleaved) {
  std::vector<std::uint8_t> out;
  out.reserve((interleaved.size() + 1) / 2 * 3);
  for (size_t i = 0; i < interleaved.size(); i += 2) {
    int v1 = interleaved[i];
    int v2 = (i + 1 < interleaved.size()) ? interleaved[i + 1] : 0;
    if (v1 < -2048 || v1 > 2047 || v2 < -2048 || v2 > 2047)
      throw_param("wfdb encode: sample out of 12-bit range");
    if (v1 < 0) v1 += 4096;
    if (v2 < 0) v2 += 4096;
    out.push_back(static_cast<std::uint8_t>(v1 & 0xFF));
    out.push_back(static_cast<std::uint8_t>(((v1 >> 8) & 0x0F) | (((v2 >> 8) & 0x0F) << 4)));
    out.push_back(static_cast<std::uint8_t>(v2 & 0xFF));
  }
  return out;
}

std::vector<std::uint8_t> encode_wfdb_16(const std::vector<int>& interleaved) {
  std::vector<std::uint8_t> out;
  out.reserve(interleaved.size() * 2);
  for (int v : interleaved) {
    if (v < -32768 || v > 32767) throw_param("wfdb encode: sample out of 16-bit range");
    if (v < 0) v += 65536;
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  }
  return out;
}

RawRecord wfdb_record_from_bytes(const std::string& header_text,
                                 const std::vector<std::uint8_t>& data, int channel) {
  const WfdbHeader h = parse_wfdb_header(header_text);
  if (channel < 0 || channel >= h.nsig)
    throw_param("wfdb: channel " + std::to_string(channel) + " out of range (record has " +
                std::to_string(h.nsig) + " signals)");
  for (const auto& sig : h.signals)
    if (sig.format != h.signals[0].format)
      throw_parse("wfdb: mixed signal formats in one data file are not supported");
  const auto chans = decode_wfdb_data(data, h.signals[0].format, h.nsig, h.nsamp);
  const WfdbSignalSpec& sig = h.signals[static_cast<size_t>(channel)];
  RawRecord rec;
  rec.fs = h.fs;
  rec.source_id = h.record;
  rec.lead = sig.description;
  rec.samples.reserve(chans[static_cast<size_t>(channel)].size());
  for (int raw : chans[static_cast<size_t>(channel)])
    rec.samples.push_back((raw - sig.baseline) / sig.gain);
  if (rec.samples.empty()) throw_parse("wfdb: record contains no samples");
  return rec;
}

RawRecord read_wfdb_record(const std::string& hea_path, int channel) {
  std::ifstream hea(hea_path);
  if (!hea) throw_io("cannot open header: " + hea_path);
  std::stringstream hbuf;
  hbuf << hea.rdbuf();
  const WfdbHeader h = parse_wfdb_header(hbuf.str());
  if (channel < 0 || channel >= h.nsig)
    throw_param("wfdb: channel " + std::to_string(channel) + " out of range");
  const size_t slash = hea_path.find_last_of('/');
  const std::string dir = (slash == std::string::npos) ? "" : hea_path.substr(0, slash + 1);
  const std::string dat_path = dir + h.signals[static_cast<size_t>(channel)].file;
  std::ifstream dat(dat_path, std::ios::binary);
  if (!dat) throw_io("cannot open data file: " + dat_path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(dat)),
                                  std::istreambuf_iterator<char>());
  return wfdb_record_from_bytes(hbuf.str(), bytes, channel);
}

}  // namespace wscec
