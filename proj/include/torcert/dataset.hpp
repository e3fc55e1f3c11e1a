#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torcert/curve.hpp"

namespace torcert {

struct CurveRecord {
  std::string label;
  std::array<i64, 5> a;  // a1, a2, a3, a4, a6
  i64 cm_disc = 0;
  WeierstrassCurve curve() const;
  bool operator==(const CurveRecord&) const = default;
};

// the bundled table, ascending |cm_disc|
const std::vector<CurveRecord>& builtin_curves();

// one JSON object per line, blank lines ignored; throws on unreadable file,
// malformed JSON, or a record missing label / a_invariants / cm_disc
std::vector<CurveRecord> load_curves(const std::string& path);

std::optional<CurveRecord> find_curve(const std::string& label);

}  // namespace torcert
