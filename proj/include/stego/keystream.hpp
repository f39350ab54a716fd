#pragma once

#include <cstdint>
#include <random>

namespace stego {

// Deterministic shared secret bit stream. Both parties construct the stream
// from the same seed and purpose id and must draw bits in the same order;
// bits_consumed then advances identically on both sides.
class KeyStream {
 public:
  // Purpose ids keep independent substreams (class selection, twirling)
  // from colliding while still deriving from one shared seed.
  KeyStream(std::uint64_t seed, std::uint32_t purpose);

  bool next_bit();

  // Up to 32 bits, first-drawn bit most significant.
  std::uint32_t next_bits(unsigned count);

  std::uint64_t bits_consumed() const { return consumed_; }

 private:
  std::mt19937_64 gen_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
  std::uint64_t consumed_ = 0;
};

}  // namespace stego
