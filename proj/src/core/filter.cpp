#include "core/filter.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "core/error.hpp"

namespace wscec {
namespace {

using cplx = std::complex<double>;

// Expand prod (z - r_i) into real coefficients, highest power first.
std::vector<double> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> nc(c.size() + 1, cplx(0.0));
    for (size_t i = 0; i < c.size(); ++i) {
      nc[i] += c[i];
      nc[i + 1] -= c[i] * r;
    }
    c = std::move(nc);
  }
  std::vector<double> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
  return out;
}

}  // namespace

FilterCoeffs butter_lowpass(int order, double cutoff_hz, double fs) {
  if (order < 1) throw_param("butter_lowpass: order must be >= 1");
  if (!(fs > 0.0)) throw_param("butter_lowpass: fs must be > 0");
  if (!(cutoff_hz > 0.0) || cutoff_hz >= fs / 2.0)
    throw_param("butter_lowpass: cutoff must lie in (0, fs/2)");
  const double warped = 2.0 * fs * std::tan(M_PI * cutoff_hz / fs);  // prewarp
  std::vector<cplx> apoles, zpoles, zzeros;
  for (int k = 0; k < order; ++k) {
    const double theta = M_PI * (2.0 * k + order + 1.0) / (2.0 * order);
    apoles.emplace_back(warped * std::cos(theta), warped * std::sin(theta));
  }
  const double fs2 = 2.0 * fs;
  for (const cplx& p : apoles) zpoles.push_back((fs2 + p) / (fs2 - p));
  zzeros.assign(static_cast<size_t>(order), cplx(-1.0, 0.0));
  FilterCoeffs fc;
  fc.b = poly_from_roots(zzeros);
  fc.a = poly_from_roots(zpoles);
  // Normalize so DC gain (z = 1) is exactly 1.
  double num = 0.0, den = 0.0;
  for (double v : fc.b) num += v;
  for (double v : fc.a) den += v;
  const double gain = den / num;
  for (double& v : fc.b) v *= gain;
  return fc;
}

std::vector<double> lfilter(const FilterCoeffs& fc, const std::vector<double>& x,
                            const std::vector<double>& zi) {
  const size_t n = fc.a.size();
  if (fc.b.size() != n || n < 2) throw_param("lfilter: b and a must share length >= 2");
  if (fc.a[0] != 1.0) throw_param("lfilter: a[0] must be 1");
  std::vector<double> z = zi;
  if (z.size() != n - 1) throw_param("lfilter: zi must have length order");
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double yi = fc.b[0] * xi + z[0];
    for (size_t k = 0; k + 1 < n - 1; ++k)
      z[k] = fc.b[k + 1] * xi + z[k + 1] - fc.a[k + 1] * yi;
    z[n - 2] = fc.b[n - 1] * xi - fc.a[n - 1] * yi;
    y[i] = yi;
  }
  return y;
}

std::vector<double> lfilter_zi(const FilterCoeffs& fc) {
  const int n = static_cast<int>(fc.a.size()) - 1;
  // Steady state of the direct-form II transposed state for unit input:
  // (I - A^T) zi = B with companion-form A, B = b[1:] - b[0] a[1:].
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) M(i, 0) += fc.a[static_cast<size_t>(i + 1)];
  for (int i = 0; i + 1 < n; ++i) M(i, i + 1) -= 1.0;
  Eigen::VectorXd B(n);
  for (int i = 0; i < n; ++i)
    B(i) = fc.b[static_cast<size_t>(i + 1)] - fc.b[0] * fc.a[static_cast<size_t>(i + 1)];
  const Eigen::VectorXd zi = M.colPivHouseholderQr().solve(B);
  return std::vector<double>(zi.data(), zi.data() + n);
}

std::vector<double> filtfilt(const FilterCoeffs& fc, const std::vector<double>& x) {
  const size_t ntaps = fc.a.size();
  const size_t padlen = 3 * (ntaps - 1);
  if (x.size() <= padlen)
    throw_param("filtfilt: signal must be longer than " + std::to_string(padlen) + " samples");
  // Odd reflection about both endpoints.
  std::vector<double> ext;
  ext.reserve(x.size() + 2 * padlen);
  for (size_t i = padlen; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (size_t i = 2; i <= padlen + 1; ++i) ext.push_back(2.0 * x.back() - x[x.size() - i]);

  const std::vector<double> zi = lfilter_zi(fc);
  auto scaled = [&zi](double v) {
    std::vector<double> z = zi;
    for (double& e : z) e *= v;
    return z;
  };
  std::vector<double> y = lfilter(fc, ext, scaled(ext.front()));
  std::reverse(y.begin(), y.end());
  y = lfilter(fc, y, scaled(y.front()));
  std::reverse(y.begin(), y.end());
  return std::vector<double>(y.begin() + static_cast<long>(padlen),
                             y.end() - static_cast<long>(padlen));
}

RawRecord lowpass_filter(const RawRecord& rec, double cutoff_hz, int order) {
  if (rec.samples.empty()) throw_param("lowpass_filter: empty record");
  RawRecord out = rec;
  out.samples = filtfilt(butter_lowpass(order, cutoff_hz, rec.fs), rec.samples);
  return out;
}

}  // namespace wscec
