#include "lpfr/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpfr {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> read_density_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  bool header_seen = false;
  std::vector<double> vals;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (!header_seen) {
      if (s != "f" && s != "a")
        throw std::runtime_error(path + ": expected header `f`, got `" + s + "`");
      header_seen = true;
      continue;
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": malformed value `" + s + "`");
    }
  }
  if (!header_seen) throw std::runtime_error(path + ": empty file");
  if (vals.empty()) throw std::runtime_error(path + ": no data rows");
  return vals;
}

void write_density_csv(const std::string& path, const DensityField& mu) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "f\n";
  for (double v : mu.f) out << format_number(v) << "\n";
}

void write_path_csv(const std::string& path, const PathGrid& pg,
                    const std::vector<std::string>& preamble) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& line : preamble) out << "# " << line << "\n";
  out << "t";
  for (int i = 0; i < pg.grid->n; ++i) out << ",f" << i;
  out << "\n";
  for (std::size_t k = 0; k < pg.times.size(); ++k) {
    out << format_number(pg.times[k]);
    for (double v : pg.frames[k]) out << "," << format_number(v);
    out << "\n";
  }
}

void write_columns_csv(const std::string& path,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns,
                       const std::vector<std::string>& preamble) {
  if (names.size() != columns.size())
    throw std::invalid_argument("write_columns_csv: name/column count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& line : preamble) out << "# " << line << "\n";
  for (std::size_t j = 0; j < names.size(); ++j)
    out << names[j] << (j + 1 < names.size() ? "," : "\n");
  const std::size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& col : columns)
    if (col.size() != rows)
      throw std::invalid_argument("write_columns_csv: ragged columns");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j)
      out << format_number(columns[j][r]) << (j + 1 < columns.size() ? "," : "\n");
  }
}

}  // namespace lpfr
