#include "torcert/dataset.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace torcert {

WeierstrassCurve CurveRecord::curve() const {
  return WeierstrassCurve::long_form(a[0], a[1], a[2], a[3], a[4]);
}

const std::vector<CurveRecord>& builtin_curves() {
  static const std::vector<CurveRecord> table = {
      {"d3-weier", {0, 0, 0, 0, 1}, -3},
      {"d4-weier", {0, 0, 0, 1, 0}, -4},
      {"d7-weier", {1, -1, 0, -2, -1}, -7},
      {"d8-weier", {0, 4, 0, 2, 0}, -8},
      {"d11-weier", {0, -1, 1, -7, 10}, -11},
      {"d12-weier", {0, 0, 0, -15, 22}, -12},
      {"d16-weier", {0, 0, 0, -11, 14}, -16},
      {"d19-weier", {0, 0, 1, -38, 90}, -19},
      {"d27-weier", {0, 0, 1, -30, 63}, -27},
      {"d28-weier", {0, 0, 0, -595, 5586}, -28},
      {"d43-weier", {0, 0, 1, -860, 9707}, -43},
      {"d67-weier", {0, 0, 1, -7370, 243528}, -67},
      {"d163-weier", {0, 0, 1, -2174420, 1234136692}, -163},
  };
  return table;
}

std::vector<CurveRecord> load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<CurveRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!j.contains("label") || !j.contains("a_invariants") || !j.contains("cm_disc"))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": record needs label, a_invariants, cm_disc");
    auto ai = j["a_invariants"];
    if (!ai.is_array() || ai.size() != 5)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": a_invariants must be [a1,a2,a3,a4,a6]");
    CurveRecord r;
    r.label = j["label"].get<std::string>();
    for (size_t i = 0; i < 5; ++i) r.a[i] = ai[i].get<i64>();
    r.cm_disc = j["cm_disc"].get<i64>();
    r.curve();  // rejects singular equations now, not at first use
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<CurveRecord> find_curve(const std::string& label) {
  for (const auto& r : builtin_curves())
    if (r.label == label) return r;
  return std::nullopt;
}

}  // namespace torcert
