#include "core/config.hpp"

#include <cstdlib>

#include "core/error.hpp"

namespace wscec {

namespace {

double to_double(const std::string& v, const std::string& key) {
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') throw_param("config: non-numeric value for " + key + ": " + v);
  return x;
}

int to_int(const std::string& v, const std::string& key) {
  double x = to_double(v, key);
  int i = static_cast<int>(x);
  if (static_cast<double>(i) != x) throw_param("config: non-integer value for " + key + ": " + v);
  return i;
}

}  // namespace

bool Config::set(const std::string& key, const std::string& value) {
  if (key == "l") l = to_int(value, key);
  else if (key == "tau") tau = to_int(value, key);
  else if (key == "d") d = to_int(value, key);
  else if (key == "k") k = to_int(value, key);
  else if (key == "m") m = to_double(value, key);
  else if (key == "s") s = to_int(value, key);
  else if (key == "epsilon") epsilon = to_double(value, key);
  else if (key == "covariance_normalization") {
    if (value == "sum") cov_norm = CovNorm::Sum;
    else if (value == "mean") cov_norm = CovNorm::Mean;
    else throw_param("config: covariance_normalization must be sum|mean, got " + value);
  } else if (key == "cur2_form") {
    if (value == "paper") cur2_form = Cur2Form::Paper;
    else if (value == "corrected") cur2_form = Cur2Form::Corrected;
    else throw_param("config: cur2_form must be paper|corrected, got " + value);
  } else if (key == "distance_form") {
    if (value == "paper") dist_form = DistForm::Paper;
    else if (value == "l2") dist_form = DistForm::L2;
    else throw_param("config: distance_form must be paper|l2, got " + value);
  } else if (key == "cutoff_hz") cutoff_hz = to_double(value, key);
  else if (key == "butter_order") butter_order = to_int(value, key);
  else if (key == "no_filter") no_filter = (value == "1" || value == "true");
  else if (key == "jobs") jobs = to_int(value, key);
  else if (key == "seed") seed = static_cast<unsigned long long>(std::strtoull(value.c_str(), nullptr, 10));
  else return false;
  return true;
}

std::string Config::get(const std::string& key) const {
  auto num = [](double x) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  if (key == "l") return std::to_string(l);
  if (key == "tau") return std::to_string(tau);
  if (key == "d") return std::to_string(d);
  if (key == "k") return std::to_string(k);
  if (key == "m") return num(m);
  if (key == "s") return std::to_string(s);
  if (key == "epsilon") return num(epsilon);
  if (key == "b_cap") return num(b_cap());
  if (key == "covariance_normalization") return cov_norm == CovNorm::Sum ? "sum" : "mean";
  if (key == "cur2_form") return cur2_form == Cur2Form::Paper ? "paper" : "corrected";
  if (key == "distance_form") return dist_form == DistForm::Paper ? "paper" : "l2";
  if (key == "cutoff_hz") return num(cutoff_hz);
  if (key == "butter_order") return std::to_string(butter_order);
  if (key == "no_filter") return no_filter ? "1" : "0";
  if (key == "jobs") return std::to_string(jobs);
  if (key == "seed") return std::to_string(seed);
  throw_param("config: unknown key " + key);
}

double Config::b_cap() const {
  if (epsilon <= 0.0) throw_param("config: epsilon must be > 0");
  return 3.0 * d * (d - 1) / epsilon;
}

}  // namespace wscec
