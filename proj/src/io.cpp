#include "sg/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sg {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

void write_csv(const std::string &path, const std::vector<std::string> &header,
               const std::vector<std::vector<double>> &columns) {
  if (header.size() != columns.size())
    throw std::invalid_argument("write_csv: header/column count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (size_t j = 0; j < header.size(); ++j)
    out << header[j] << (j + 1 < header.size() ? ',' : '\n');
  size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto &c : columns)
    if (c.size() != rows)
      throw std::invalid_argument("write_csv: ragged columns");
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < columns.size(); ++j)
      out << fmt17(columns[j][i]) << (j + 1 < columns.size() ? ',' : '\n');
}

std::string fnv1a_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fnv1a_file: cannot open " + path);
  uint64_t hash = 1469598103934665603ull;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= (uint64_t)(unsigned char)buf[i];
      hash *= 1099511628211ull;
    }
    if (got < (std::streamsize)sizeof(buf)) break;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", (unsigned long long)hash);
  return out;
}

} // namespace sg
