#include "core/fixtures.hpp"

#include <cmath>

#include "core/error.hpp"

namespace wscec {
namespace {

constexpr double kGold = 0.6180339887498949;  // golden-ratio conjugate
constexpr double kFs = 360.0;
constexpr double kTau = 2.0 * M_PI;

using Vec = std::vector<double>;

Vec zeros() { return Vec(kBeatLen, 0.0); }

void add_bump(Vec& t, double c, double w, double a) {
  for (int i = 0; i < kBeatLen; ++i) {
    const double z = (i - c) / w;
    t[i] += a * std::exp(-0.5 * z * z);
  }
}

// Deterministic multi-cosine "noise", approximately flat over [2, 50] Hz,
// RMS-normalized then scaled to sigma. Golden-ratio phase ladder keeps the
// components incoherent without an RNG.
void add_broadband(Vec& t, double sigma, double shift) {
  constexpr int nf = 49;
  constexpr double f_lo = 2.0, f_hi = 50.0;
  Vec out(kBeatLen, 0.0);
  for (int q = 0; q < nf; ++q) {
    const double f = f_lo + (f_hi - f_lo) * q / (nf - 1);
    const double ph = kTau * ((q + 1) * kGold + shift);
    for (int i = 0; i < kBeatLen; ++i) out[i] += std::cos(kTau * f * i / kFs + ph);
  }
  double ms = 0.0;
  for (double v : out) ms += v * v;
  const double rms = std::sqrt(ms / kBeatLen);
  for (int i = 0; i < kBeatLen; ++i) t[i] += sigma * out[i] / rms;
}

// Three-tone comb at 34/36/38 Hz sharing one per-sample amplitude envelope.
void add_comb(Vec& t, const Vec& amp, double shift) {
  const double freqs[3] = {34.0, 36.0, 38.0};
  for (int q = 0; q < 3; ++q) {
    const double ph = kTau * ((q + 7) * kGold + shift);
    for (int i = 0; i < kBeatLen; ++i)
      t[i] += amp[i] * std::cos(kTau * freqs[q] * i / kFs + ph);
  }
}

double smoothstep(double x) {
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;
  return x * x * (3.0 - 2.0 * x);
}

void add_tone(Vec& t, double f, const Vec& amp, double phase) {
  for (int i = 0; i < kBeatLen; ++i)
    t[i] += amp[i] * std::cos(kTau * f * i / kFs + phase);
}

Vec const_amp(double a) { return Vec(kBeatLen, a); }

Vec beat_normal() {
  Vec t = zeros();
  add_bump(t, 100, 2.5, 1.0);
  add_bump(t, 93, 2.0, -0.15);
  add_bump(t, 108, 2.5, -0.2);
  add_bump(t, 55, 7.0, 0.12);
  add_bump(t, 180, 12.0, 0.3);
  add_broadband(t, 0.06, 0.0);
  add_comb(t, const_amp(0.14), 0.0);
  return t;
}

Vec beat_ap() {
  Vec t = zeros();
  add_bump(t, 100, 2.5, 1.0);
  add_bump(t, 93, 2.0, -0.15);
  add_bump(t, 108, 2.5, -0.2);
  add_bump(t, 38, 4.0, 0.2);  // premature P wave rides close to the QRS
  add_bump(t, 180, 12.0, 0.3);
  add_broadband(t, 0.02, 0.25);
  add_comb(t, const_amp(0.22), 0.25);
  return t;
}

Vec beat_vf() {
  Vec t = zeros();
  for (int i = 0; i < kBeatLen; ++i) {
    const double x = static_cast<double>(i);
    const double env = 0.48 * (0.45 + 0.55 * x / kBeatLen);
    const double frac = x / kBeatLen;
    t[i] = env * std::sin(kTau * (4.5 * x / kFs + 1.8 * frac * frac));
  }
  add_broadband(t, 0.1, 0.5);
  Vec amp(kBeatLen);
  for (int i = 0; i < kBeatLen; ++i)
    amp[i] = 0.14 + (0.17 - 0.14) * i / (kBeatLen - 1);
  add_comb(t, amp, 0.5);
  return t;
}

Vec beat_fvn() {
  Vec t = zeros();
  add_bump(t, 100, 8.5, 1.3);
  add_bump(t, 124, 10.0, -0.45);
  add_broadband(t, 0.05, 0.75);
  Vec pair = zeros();
  add_tone(pair, 36.0, const_amp(0.86), 0.7);
  add_tone(pair, 33.0, const_amp(0.25 * 0.86), 2.1);
  Vec tail = zeros();
  add_tone(tail, 35.0, const_amp(0.32), 2.0);
  for (int i = 0; i < kBeatLen; ++i) {
    const double c = smoothstep((i - 200.0) / 20.0);
    t[i] += (1.0 - c) * pair[i] + c * tail[i];
  }
  return t;
}

Vec beat_pvc() {
  Vec t = zeros();
  add_bump(t, 100, 9.0, 1.4);
  add_bump(t, 125, 10.0, -0.5);
  add_broadband(t, 0.05, 0.1);
  add_tone(t, 36.0, const_amp(0.9), 0.7);
  add_tone(t, 33.0, const_amp(0.225), 2.1);
  return t;
}

Vec beat_lbbb() {
  Vec t = zeros();
  add_bump(t, 100, 14.0, 1.2);
  add_bump(t, 185, 14.0, 0.3);
  add_broadband(t, 0.05, 0.35);
  Vec pair = zeros();
  add_tone(pair, 36.0, const_amp(1.2), 1.3);
  add_tone(pair, 33.0, const_amp(0.35 * 1.2), 0.4);
  Vec tail = zeros();
  add_tone(tail, 35.0, const_amp(0.32), 2.0);
  for (int i = 0; i < kBeatLen; ++i) {
    const double c = smoothstep((i - 150.0) / 20.0);
    t[i] += (1.0 - c) * pair[i] + c * tail[i];
  }
  return t;
}

Vec beat_rbbb() {
  Vec t = zeros();
  add_bump(t, 94, 6.0, 1.0);
  add_bump(t, 112, 6.0, 0.9);  // notched RSR' pair
  add_bump(t, 130, 8.0, -0.3);
  add_broadband(t, 0.05, 0.6);
  add_comb(t, const_amp(0.6), 0.6);
  return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"normal", "ap", "vf", "fvn", "pvc", "lbbb", "rbbb"};
}

TrueLabel fixture_truth(const std::string& name) {
  if (name == "normal") return TrueLabel::N;
  if (name == "ap") return TrueLabel::AP;
  if (name == "vf") return TrueLabel::VF;
  if (name == "fvn") return TrueLabel::FVN;
  if (name == "pvc") return TrueLabel::PVC;
  if (name == "lbbb") return TrueLabel::LBBB;
  if (name == "rbbb") return TrueLabel::RBBB;
  throw_param("unknown fixture name: " + name);
}

Heartbeat fixture_beat(const std::string& name) {
  Heartbeat hb;
  if (name == "normal")
    hb.samples = beat_normal();
  else if (name == "ap")
    hb.samples = beat_ap();
  else if (name == "vf")
    hb.samples = beat_vf();
  else if (name == "fvn")
    hb.samples = beat_fvn();
  else if (name == "pvc")
    hb.samples = beat_pvc();
  else if (name == "lbbb")
    hb.samples = beat_lbbb();
  else if (name == "rbbb")
    hb.samples = beat_rbbb();
  else
    throw_param("unknown fixture name: " + name);
  hb.r_index = 100;
  hb.annotation = fixture_truth(name);
  hb.source_id = "fixture:" + name;
  return hb;
}

std::vector<Heartbeat> fixture_batch() {
  std::vector<Heartbeat> out;
  for (const auto& name : fixture_names()) out.push_back(fixture_beat(name));
  return out;
}

}  // namespace wscec
