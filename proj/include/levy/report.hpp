#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

namespace levy {

// Outcome of one named statistical check, with enough metadata
// (seed, replicates, grid) to regenerate it exactly.
struct TestReport {
  std::string name;
  double statistic = 0.0;
  std::optional<double> p_value;
  std::optional<double> z_score;
  double threshold = 0.0;
  bool pass = false;
  bool negative_control = false;  // informational: pass already encodes intent
  std::uint64_t n_replicates = 0;
  std::uint64_t n_grid = 0;
  std::uint64_t master_seed = 0;
  std::string notes;
};

namespace detail {
inline std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}
}  // namespace detail

// single JSON object, no trailing newline
inline std::string to_json_line(const TestReport& r) {
  std::string s = "{\"name\":\"" + detail::json_escape(r.name) + "\"";
  s += ",\"statistic\":" + detail::num17(r.statistic);
  if (r.p_value) s += ",\"p_value\":" + detail::num17(*r.p_value);
  if (r.z_score) s += ",\"z_score\":" + detail::num17(*r.z_score);
  s += ",\"threshold\":" + detail::num17(r.threshold);
  s += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  s += std::string(",\"negative_control\":") + (r.negative_control ? "true" : "false");
  s += ",\"n_replicates\":" + std::to_string(r.n_replicates);
  s += ",\"n_grid\":" + std::to_string(r.n_grid);
  s += ",\"master_seed\":" + std::to_string(r.master_seed);
  s += ",\"notes\":\"" + detail::json_escape(r.notes) + "\"}";
  return s;
}

inline std::string summary_line(const TestReport& r) {
  char buf[160];
  if (r.p_value)
    std::snprintf(buf, sizeof(buf), "%-28s %s  stat=%.4g  p=%.4g", r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.statistic, *r.p_value);
  else if (r.z_score)
    std::snprintf(buf, sizeof(buf), "%-28s %s  stat=%.4g  z=%.3f", r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.statistic, *r.z_score);
  else
    std::snprintf(buf, sizeof(buf), "%-28s %s  stat=%.4g", r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.statistic);
  std::string s = buf;
  if (!r.notes.empty()) s += "  [" + r.notes + "]";
  return s;
}

}  // namespace levy
