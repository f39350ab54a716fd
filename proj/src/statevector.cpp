#include "stego/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "stego/perfect_code.hpp"
#include "stego/util.hpp"

namespace stego {

namespace {

constexpr std::size_t kMaxQubits = 9;
constexpr double kInvSqrt2 = 0.70710678118654752440;

const StateVector::cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("StateVector supports 1 to 9 qubits");
  }
  amps_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
  StateVector state(n);
  if (index >= state.size()) {
    throw std::invalid_argument("basis index out of range");
  }
  state.amps_[0] = cplx{0.0, 0.0};
  state.amps_[index] = cplx{1.0, 0.0};
  return state;
}

StateVector StateVector::single_qubit(double theta, double phi) {
  StateVector state(1);
  state.amps_[0] = cplx{std::cos(theta / 2), 0.0};
  state.amps_[1] = std::polar(std::sin(theta / 2), phi);
  return state;
}

StateVector StateVector::random_state(std::size_t n, std::mt19937_64& rng) {
  StateVector state(n);
  double norm = 0.0;
  for (auto& a : state.amps_) {
    a = cplx{normal_double(rng), normal_double(rng)};
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : state.amps_) a *= scale;
  return state;
}

StateVector StateVector::tensor(const StateVector& lhs,
                                const StateVector& rhs) {
  StateVector out(lhs.n_ + rhs.n_);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      out.amps_[(i << rhs.n_) | j] = lhs.amps_[i] * rhs.amps_[j];
    }
  }
  return out;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

std::complex<double> StateVector::inner(const StateVector& other) const {
  if (n_ != other.n_) throw std::invalid_argument("state sizes differ");
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    total += std::conj(amps_[i]) * other.amps_[i];
  }
  return total;
}

double StateVector::fidelity(const StateVector& other) const {
  return std::norm(inner(other));
}

void StateVector::apply_h(std::size_t qubit) {
  const std::size_t stride = std::size_t{1} << bit_of_qubit(qubit);
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a = amps_[i];
      const cplx b = amps_[i + stride];
      amps_[i] = (a + b) * kInvSqrt2;
      amps_[i + stride] = (a - b) * kInvSqrt2;
    }
  }
}

void StateVector::apply_s(std::size_t qubit, bool dagger) {
  const std::size_t stride = std::size_t{1} << bit_of_qubit(qubit);
  const cplx factor = dagger ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      amps_[i + stride] *= factor;
    }
  }
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
  const std::size_t cbit = std::size_t{1} << bit_of_qubit(control);
  const std::size_t tbit = std::size_t{1} << bit_of_qubit(target);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps_[i], amps_[i | tbit]);
    }
  }
}

void StateVector::apply_gates(const GateSequence& gates, std::size_t offset,
                              bool inverse) {
  const auto apply_one = [&](const Gate& g, bool invert) {
    switch (g.kind) {
      case Gate::Kind::kH:
        apply_h(offset + g.q0);
        break;
      case Gate::Kind::kS:
        apply_s(offset + g.q0, invert);
        break;
      case Gate::Kind::kCX:
        apply_cx(offset + g.q0, offset + g.q1);
        break;
    }
  };
  if (!inverse) {
    for (const Gate& g : gates) apply_one(g, false);
  } else {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      apply_one(*it, true);
    }
  }
}

void StateVector::apply_pauli(const PauliOperator& p, std::size_t offset) {
  if (offset + p.num_qubits() > n_) {
    throw std::invalid_argument("pauli does not fit the register");
  }
  // Index-space masks; pauli qubit j lives at state qubit offset + j.
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    const std::size_t bit = std::size_t{1} << bit_of_qubit(offset + j);
    if (p.x_bit(j)) xmask |= bit;
    if (p.z_bit(j)) zmask |= bit;
  }
  const cplx base = kIPow[p.phase_exponent() & 3];
  // i^k Z^z X^x |m> = i^k (-1)^{|z & (m^x)|} |m ^ x>, applied as a
  // permutation of two-element orbits.
  std::vector<cplx> out(amps_.size());
  for (std::size_t m = 0; m < amps_.size(); ++m) {
    const std::size_t target = m ^ xmask;
    const int sign = std::popcount(target & zmask) & 1;
    out[target] = (sign ? -base : base) * amps_[m];
  }
  amps_ = std::move(out);
}

bool StateVector::register_is_zero(std::size_t first, std::size_t count,
                                   double tol) const {
  std::size_t mask = 0;
  for (std::size_t q = first; q < first + count; ++q) {
    mask |= std::size_t{1} << bit_of_qubit(q);
  }
  double leak = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) leak += std::norm(amps_[i]);
  }
  return leak < tol;
}

std::string StateVector::dump() const {
  std::string out;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    out += std::to_string(i);
    out += '\t';
    out += format_double(amps_[i].real());
    out += '\t';
    out += format_double(amps_[i].imag());
    out += '\n';
  }
  return out;
}

void apply_syndrome_swap(StateVector& state, const EncodingTable& table,
                         SwapDirection direction) {
  if (state.num_qubits() != 9) {
    throw std::invalid_argument("syndrome swap expects a 9-qubit register");
  }
  auto& amps = state.amplitudes();

  // U1: controlled on the stego nibble (bits 8..5), apply the row pre-image
  // to the ancilla and cover qubits (bits 4..0).
  const auto apply_u1 = [&]() {
    std::vector<StateVector::cplx> out(amps.size());
    // Precompute per-nibble masks and phases of the 5-qubit pre-image.
    struct RowAction {
      std::size_t xmask, zmask;
      StateVector::cplx base;
    };
    std::array<RowAction, 16> actions;
    for (std::size_t k = 0; k < 16; ++k) {
      const PauliOperator pre = table.row_for_nibble(std::uint8_t(k)).pre_image();
      std::size_t xm = 0, zm = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        const std::size_t bit = std::size_t{1} << (4 - j);
        if (pre.x_bit(j)) xm |= bit;
        if (pre.z_bit(j)) zm |= bit;
      }
      actions[k] = {xm, zm, kIPow[pre.phase_exponent() & 3]};
    }
    for (std::size_t m = 0; m < amps.size(); ++m) {
      const std::size_t nibble = (m >> 5) & 0xF;
      const RowAction& act = actions[nibble];
      const std::size_t target = m ^ act.xmask;
      const int sign = std::popcount(target & act.zmask) & 1;
      out[target] = (sign ? -act.base : act.base) * amps[m];
    }
    amps = std::move(out);
  };

  // U2: controlled on the ancilla value (bits 4..1), X^j on the stego
  // register (bits 8..5).
  const auto apply_u2 = [&]() {
    std::vector<StateVector::cplx> out(amps.size());
    for (std::size_t m = 0; m < amps.size(); ++m) {
      const std::size_t j = (m >> 1) & 0xF;
      out[m ^ (j << 5)] = amps[m];
    }
    amps = std::move(out);
  };

  if (direction == SwapDirection::kForward) {
    apply_u1();
    apply_u2();
  } else {
    apply_u2();
    apply_u1();
  }
}

}  // namespace stego
