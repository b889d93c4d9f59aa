#pragma once

#include "gcpr/model.hpp"

#include <fstream>
#include <sstream>

namespace gcpr {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Load a dataset from CSV with header `t,y,x1[,x2,...]`. Rows must be sorted
/// by t; blank or non-numeric cells are rejected with the offending line
/// number. The time index is renumbered 1..T internally; the original t
/// column is kept as labels for reporting.
inline Dataset load_dataset_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  // Tolerate a UTF-8 byte order mark on the header.
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB &&
      static_cast<unsigned char>(line[2]) == 0xBF)
    line = line.substr(3);
  auto header = detail::split_csv_line(line);
  if (header.size() < 2 || detail::trim(header[0]) != "t" || detail::trim(header[1]) != "y")
    throw ParseError(path + ": line 1: header must be t,y,x1[,x2,...]");
  const int m = static_cast<int>(header.size()) - 2;
  for (int i = 0; i < m; ++i) {
    if (detail::trim(header[static_cast<std::size_t>(2 + i)]) != "x" + std::to_string(i + 1))
      throw ParseError(path + ": line 1: regressor columns must be named x1,x2,...");
  }

  std::vector<double> ts, ys;
  std::vector<std::vector<double>> xs(static_cast<std::size_t>(m));
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) {
      // allow a single trailing newline, nothing else
      if (in.peek() == EOF) break;
      throw ParseError(path + ": line " + std::to_string(lineno) + ": blank row");
    }
    auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size())
      throw ParseError(path + ": line " + std::to_string(lineno) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    std::vector<double> vals;
    for (const auto& c : cells) {
      const std::string s = detail::trim(c);
      if (s.empty())
        throw ParseError(path + ": line " + std::to_string(lineno) + ": blank cell");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        throw ParseError(path + ": line " + std::to_string(lineno) + ": not a number: " + s);
      }
      if (used != s.size())
        throw ParseError(path + ": line " + std::to_string(lineno) + ": not a number: " + s);
      if (!std::isfinite(v))
        throw ParseError(path + ": line " + std::to_string(lineno) + ": non-finite value");
      vals.push_back(v);
    }
    if (!ts.empty() && vals[0] <= ts.back())
      throw ParseError(path + ": line " + std::to_string(lineno) + ": rows not sorted by t");
    ts.push_back(vals[0]);
    ys.push_back(vals[1]);
    for (int i = 0; i < m; ++i) xs[static_cast<std::size_t>(i)].push_back(vals[static_cast<std::size_t>(2 + i)]);
  }
  if (ts.empty()) throw ParseError(path + ": no data rows");

  Dataset ds;
  ds.time_labels = ts;
  const int T = static_cast<int>(ts.size());
  ds.y = Eigen::Map<const Vec>(ys.data(), T);
  ds.x.resize(T, m);
  for (int i = 0; i < m; ++i)
    ds.x.col(i) = Eigen::Map<const Vec>(xs[static_cast<std::size_t>(i)].data(), T);
  return ds;
}

/// Write a (theta, rss) profile as CSV with columns `theta,rss`.
inline void write_profile_csv(const std::string& path,
                              const std::vector<std::pair<double, double>>& curve,
                              const std::string& manifest_comment = "") {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(17);
  if (!manifest_comment.empty()) out << "# " << manifest_comment << "\n";
  out << "theta,rss\n";
  for (const auto& [th, rss] : curve) out << th << "," << rss << "\n";
}

}  // namespace gcpr
