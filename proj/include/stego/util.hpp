#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace stego {

// Renders the low n bits of mask as a 0/1 string, bit 0 first.
std::string bits_to_string(std::uint32_t mask, std::size_t n);

// Parses a 0/1 string back into a mask, character 0 -> bit 0.
std::uint32_t bits_from_string(const std::string& text);

// Rank of a set of GF(2) row vectors (each row a bitmask).
std::size_t gf2_rank(std::vector<std::uint32_t> rows);

// Solves A x = b over GF(2). Rows pair a coefficient mask with a rhs bit.
// Free variables are set to zero, so the solution is deterministic.
// Returns nullopt when the system is inconsistent.
std::optional<std::uint32_t> gf2_solve(
    std::vector<std::pair<std::uint32_t, int>> rows, std::size_t num_vars);

// Uniform double in [0, 1) with 53 random bits. std::uniform_real_distribution
// is implementation-defined; this keeps sampled streams reproducible.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on reproducible uniforms.
double normal_double(std::mt19937_64& rng);

// Writes content to path via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

// Shortest representation with up to 12 significant digits.
std::string format_double(double value);

}  // namespace stego
