#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sg {

// Fixed 17-significant-digit scientific formatting for reproducible diffs.
std::string fmt17(double v);

// Write CSV with a header row; all numeric cells use fmt17.
void write_csv(const std::string &path, const std::vector<std::string> &header,
               const std::vector<std::vector<double>> &columns);

// FNV-1a 64-bit checksum of a file's bytes, hex-encoded.
std::string fnv1a_file(const std::string &path);

} // namespace sg
