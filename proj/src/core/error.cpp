#include "core/error.hpp"

namespace wscec {

void throw_io(const std::string& msg) { throw Error(ErrorKind::Io, msg); }
void throw_parse(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }
void throw_param(const std::string& msg) { throw Error(ErrorKind::Param, msg); }
void throw_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
void throw_undefined(const std::string& msg) { throw Error(ErrorKind::Undefined, msg); }
void throw_truth(const std::string& msg) { throw Error(ErrorKind::Truth, msg); }

}  // namespace wscec
