#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "levy/grid_path.hpp"
#include "levy/minorant.hpp"
#include "levy/stick_breaking.hpp"

namespace levy {

// 17 significant digits, '.' decimal, LF endings: bit-stable across runs
// for regression snapshots.
inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string grid_path_csv(const GridPath& p) {
  std::string out = "time,value\n";
  for (std::size_t k = 0; k < p.values.size(); ++k)
    out += fmt17(p.time(k)) + "," + fmt17(p.values[k]) + "\n";
  return out;
}

inline std::string faces_csv(const MinorantDecomposition& dec) {
  std::string out = "g,d,length,increment,slope\n";
  for (const Face& f : dec.faces)
    out += fmt17(f.g) + "," + fmt17(f.d) + "," + fmt17(f.length) + "," + fmt17(f.increment) +
           "," + fmt17(f.slope) + "\n";
  return out;
}

inline std::string face_points_csv_header() { return "replicate,i,length,increment,slope\n"; }

inline void append_face_points_csv(std::string& out, std::uint64_t replicate,
                                   const std::vector<FacePoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    out += std::to_string(replicate) + "," + std::to_string(i + 1) + "," +
           fmt17(points[i].length) + "," + fmt17(points[i].increment) + "," +
           fmt17(points[i].slope()) + "\n";
}

inline GridPath parse_grid_path_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty path CSV");
  std::vector<double> times, values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("bad path CSV row: " + line);
    times.push_back(std::stod(line.substr(0, comma)));
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  if (times.size() < 2) throw std::runtime_error("path CSV needs at least 2 rows");
  GridPath p;
  p.t0 = times.front();
  p.dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const double step = times[k + 1] - times[k];
    if (std::abs(step - p.dt) > 1e-9 * std::max(1.0, std::abs(p.dt)))
      throw std::runtime_error("path CSV is not on a uniform grid");
  }
  p.values = values;
  p.validate();
  return p;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace levy
