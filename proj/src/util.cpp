#include "stego/util.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace stego {

std::string bits_to_string(std::uint32_t mask, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) out[i] = '1';
  }
  return out;
}

std::uint32_t bits_from_string(const std::string& text) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      mask |= 1u << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bit string may contain only 0 and 1");
    }
  }
  return mask;
}

std::size_t gf2_rank(std::vector<std::uint32_t> rows) {
  std::size_t rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot] >> bit) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> bit) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::uint32_t> gf2_solve(
    std::vector<std::pair<std::uint32_t, int>> rows, std::size_t num_vars) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < num_vars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !((rows[pivot].first >> col) & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r].first >> col) & 1u)) {
        rows[r].first ^= rows[rank].first;
        rows[r].second ^= rows[rank].second;
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].second) return std::nullopt;
  }
  std::uint32_t solution = 0;
  for (std::size_t r = 0; r < rank; ++r) {
    if (rows[r].second) solution |= 1u << pivot_col[r];
  }
  return solution;
}

double normal_double(std::mt19937_64& rng) {
  double u1 = uniform_double(rng);
  while (u1 <= 0.0) u1 = uniform_double(rng);
  const double u2 = uniform_double(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace stego
