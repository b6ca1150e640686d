#pragma once
#include <string>
#include <vector>

#include "core/types.hpp"

namespace wscec {

// Deterministic synthetic exemplars for the seven annotation classes, built
// from pure cos/exp so every platform reproduces them bit-for-bit modulo libm.
// Names: normal, ap, vf, fvn, pvc, lbbb, rbbb.
std::vector<std::string> fixture_names();

TrueLabel fixture_truth(const std::string& name);

// 300-sample beat with r_index 100 and the class annotation attached.
Heartbeat fixture_beat(const std::string& name);

// All seven beats in canonical order.
std::vector<Heartbeat> fixture_batch();

}  // namespace wscec
