#pragma once
#include <stdexcept>
#include <string>

namespace wscec {

// Error taxonomy mirrored by the C API status codes.
enum class ErrorKind {
  Io,         // unreadable/missing files
  Parse,      // malformed content (headers, CSV rows)
  Param,      // precondition violations on numeric parameters
  Domain,     // mathematical domain errors (non-SPD input, underflow)
  Undefined,  // feature undefined for this beat (routes to Unclassified)
  Truth,      // ground truth required but absent
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void throw_io(const std::string& msg);
[[noreturn]] void throw_parse(const std::string& msg);
[[noreturn]] void throw_param(const std::string& msg);
[[noreturn]] void throw_domain(const std::string& msg);
[[noreturn]] void throw_undefined(const std::string& msg);
[[noreturn]] void throw_truth(const std::string& msg);

}  // namespace wscec
