#pragma once
#include <cstdint>
#include <ostream>

namespace wscec {

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// Seeded invariant suite; prints one pass/fail line per check.
SelftestResult selftest(std::uint64_t seed, std::ostream& out);

}  // namespace wscec
