#include "stego/keystream.hpp"

#include <stdexcept>

namespace stego {

KeyStream::KeyStream(std::uint64_t seed, std::uint32_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), purpose};
  gen_.seed(seq);
}

bool KeyStream::next_bit() {
  if (available_ == 0) {
    buffer_ = gen_();
    available_ = 64;
  }
  const bool bit = buffer_ & 1u;
  buffer_ >>= 1;
  --available_;
  ++consumed_;
  return bit;
}

std::uint32_t KeyStream::next_bits(unsigned count) {
  if (count > 32) throw std::invalid_argument("at most 32 bits per draw");
  std::uint32_t value = 0;
  for (unsigned i = 0; i < count; ++i) {
    value = (value << 1) | static_cast<std::uint32_t>(next_bit());
  }
  return value;
}

}  // namespace stego
