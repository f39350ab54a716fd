#include "stego/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace stego {

namespace {

constexpr std::size_t kMaxQubits = 16;

int y_count(std::uint32_t z, std::uint32_t x) { return std::popcount(z & x); }

constexpr char kLetters[3] = {'X', 'Y', 'Z'};

}  // namespace

PauliOperator::PauliOperator(std::size_t n) : PauliOperator(n, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t n, std::uint32_t z_mask,
                             std::uint32_t x_mask, int phase) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("PauliOperator supports 1 to 16 qubits");
  }
  const std::uint32_t valid = (n == 32) ? ~0u : ((1u << n) - 1u);
  if ((z_mask & ~valid) || (x_mask & ~valid)) {
    throw std::invalid_argument("Pauli bit mask exceeds qubit count");
  }
  n_ = static_cast<std::uint8_t>(n);
  z_ = z_mask;
  x_ = x_mask;
  phase_ = static_cast<std::uint8_t>(((phase % 4) + 4) % 4);
}

PauliOperator PauliOperator::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && text.front() == '-') {
    phase = 2;
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  if (text.size() > kMaxQubits) {
    throw std::invalid_argument("Pauli string longer than 16 qubits");
  }
  std::uint32_t z = 0, x = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x |= 1u << q;
        break;
      case 'Z':
        z |= 1u << q;
        break;
      case 'Y':
        z |= 1u << q;
        x |= 1u << q;
        phase += 1;  // Y = i ZX
        break;
      default:
        throw std::invalid_argument("invalid Pauli character '" +
                                    std::string(1, text[q]) + "' at position " +
                                    std::to_string(q));
    }
  }
  return PauliOperator(text.size(), z, x, phase);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit,
                                    char kind) {
  if (qubit >= n) throw std::invalid_argument("qubit index out of range");
  std::uint32_t z = 0, x = 0;
  int phase = 0;
  switch (kind) {
    case 'X':
      x = 1u << qubit;
      break;
    case 'Z':
      z = 1u << qubit;
      break;
    case 'Y':
      z = x = 1u << qubit;
      phase = 1;
      break;
    default:
      throw std::invalid_argument("single expects X, Y or Z");
  }
  return PauliOperator(n, z, x, phase);
}

PauliOperator PauliOperator::tensor(const PauliOperator& lhs,
                                    const PauliOperator& rhs) {
  const std::size_t n = lhs.num_qubits() + rhs.num_qubits();
  return PauliOperator(n, lhs.z_ | (rhs.z_ << lhs.n_),
                       lhs.x_ | (rhs.x_ << lhs.n_),
                       lhs.phase_ + rhs.phase_);
}

std::size_t PauliOperator::weight() const { return std::popcount(z_ | x_); }

bool PauliOperator::is_hermitian() const {
  return ((phase_ - y_count(z_, x_)) & 1) == 0;
}

int PauliOperator::sign() const {
  const int rel = ((phase_ - y_count(z_, x_)) % 4 + 4) % 4;
  if (rel == 0) return 1;
  if (rel == 2) return -1;
  throw std::logic_error("sign() called on a non-Hermitian Pauli");
}

PauliOperator PauliOperator::adjoint() const {
  // (Z^z X^x)^dag = X^x Z^z = (-1)^{|z&x|} Z^z X^x
  const int phase = -static_cast<int>(phase_) + 2 * y_count(z_, x_);
  return PauliOperator(n_, z_, x_, phase);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  check_same_size(other);
  const int product = std::popcount(z_ & other.x_) +
                      std::popcount(x_ & other.z_);
  return (product & 1) == 0;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  a.check_same_size(b);
  // Moving a's X factors left past b's Z factors gives (-1) per overlap.
  const int phase =
      a.phase_ + b.phase_ + 2 * std::popcount(a.x_ & b.z_);
  return PauliOperator(a.n_, a.z_ ^ b.z_, a.x_ ^ b.x_, phase);
}

PauliOperator PauliOperator::sub_operator_hermitian(std::size_t first,
                                                    std::size_t count) const {
  const std::uint32_t mask = ((1u << count) - 1u);
  const std::uint32_t z = (z_ >> first) & mask;
  const std::uint32_t x = (x_ >> first) & mask;
  return PauliOperator(count, z, x, y_count(z, x));
}

PauliOperator PauliOperator::sub_operator_with_phase(std::size_t first,
                                                     std::size_t count,
                                                     int phase) const {
  const std::uint32_t mask = ((1u << count) - 1u);
  return PauliOperator(count, (z_ >> first) & mask, (x_ >> first) & mask,
                       phase);
}

// Conjugation updates follow the usual tableau sign rules for rows written as
// +/- tensor products of letters; the i^phase bookkeeping is converted to and
// from that form around the bit update.
void PauliOperator::conj_h(std::size_t q) {
  const int m_before = y_count(z_, x_);
  const int flip = (z_ >> q) & (x_ >> q) & 1u;
  const std::uint32_t zq = (z_ >> q) & 1u;
  const std::uint32_t xq = (x_ >> q) & 1u;
  z_ = (z_ & ~(1u << q)) | (xq << q);
  x_ = (x_ & ~(1u << q)) | (zq << q);
  const int m_after = y_count(z_, x_);
  phase_ = static_cast<std::uint8_t>(
      ((phase_ - m_before + 2 * flip + m_after) % 4 + 4) % 4);
}

void PauliOperator::conj_s(std::size_t q) {
  const int m_before = y_count(z_, x_);
  const int flip = (z_ >> q) & (x_ >> q) & 1u;
  z_ ^= ((x_ >> q) & 1u) << q;
  const int m_after = y_count(z_, x_);
  phase_ = static_cast<std::uint8_t>(
      ((phase_ - m_before + 2 * flip + m_after) % 4 + 4) % 4);
}

void PauliOperator::conj_cx(std::size_t control, std::size_t target) {
  const int m_before = y_count(z_, x_);
  const int xc = (x_ >> control) & 1;
  const int zc = (z_ >> control) & 1;
  const int xt = (x_ >> target) & 1;
  const int zt = (z_ >> target) & 1;
  const int flip = xc & zt & (xt ^ zc ^ 1);
  x_ ^= static_cast<std::uint32_t>(xc) << target;
  z_ ^= static_cast<std::uint32_t>(zt) << control;
  const int m_after = y_count(z_, x_);
  phase_ = static_cast<std::uint8_t>(
      ((phase_ - m_before + 2 * flip + m_after) % 4 + 4) % 4);
}

std::string PauliOperator::str() const {
  const int rel = ((phase_ - y_count(z_, x_)) % 4 + 4) % 4;
  std::string out;
  switch (rel) {
    case 0:
      break;
    case 1:
      out += "i";
      break;
    case 2:
      out += "-";
      break;
    case 3:
      out += "-i";
      break;
  }
  for (std::size_t q = 0; q < n_; ++q) {
    const bool z = z_bit(q), x = x_bit(q);
    out += z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I');
  }
  return out;
}

void PauliOperator::check_same_size(const PauliOperator& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("Pauli qubit counts differ: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  }
}

std::vector<PauliOperator> enumerate_pauli_errors(std::size_t n,
                                                  std::size_t w) {
  if (w > n) throw std::invalid_argument("weight exceeds qubit count");
  std::vector<PauliOperator> out;

  std::vector<std::size_t> positions(w);
  for (std::size_t i = 0; i < w; ++i) positions[i] = i;

  const auto emit_letters = [&](auto&& self, PauliOperator acc,
                                std::size_t slot) -> void {
    if (slot == w) {
      out.push_back(acc);
      return;
    }
    for (char letter : kLetters) {
      self(self, acc * PauliOperator::single(n, positions[slot], letter),
           slot + 1);
    }
  };

  while (true) {
    emit_letters(emit_letters, PauliOperator(n), 0);
    if (w == 0) break;
    // Next position combination in lexicographic order.
    std::size_t i = w;
    while (i > 0 && positions[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) break;
    ++positions[i - 1];
    for (std::size_t j = i; j < w; ++j) positions[j] = positions[j - 1] + 1;
  }
  return out;
}

}  // namespace stego
