#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stego {

// Phase-tracked Pauli operator on up to 16 qubits in symplectic (Z|X) form.
//
// The stored operator is
//
//   i^phase * prod_q Z_q^{z_q} X_q^{x_q}
//
// with the per-qubit Z factor to the left of the X factor. Bit q of the z/x
// masks is qubit q, and qubit 0 is the leftmost character of the text form.
// A Hermitian Y is the pair (z=1, x=1) with phase exponent 1, since Y = i ZX;
// parsing the character 'Y' therefore adds 1 to the phase exponent so the
// operator equals the Hermitian Y matrix exactly.
class PauliOperator {
 public:
  PauliOperator() = default;

  // Identity on n qubits.
  explicit PauliOperator(std::size_t n);

  // Explicit component constructor. phase is the exponent of i, mod 4.
  PauliOperator(std::size_t n, std::uint32_t z_mask, std::uint32_t x_mask,
                int phase);

  // Parses "XZZXI" or "-IXYY". Only a leading '-' is accepted as a sign.
  static PauliOperator parse(std::string_view text);

  // Single-qubit X/Y/Z (Hermitian, positive sign) embedded in n qubits.
  static PauliOperator single(std::size_t n, std::size_t qubit, char kind);

  // Tensor product; the qubits of rhs follow the qubits of lhs.
  static PauliOperator tensor(const PauliOperator& lhs,
                              const PauliOperator& rhs);

  std::size_t num_qubits() const { return n_; }
  std::uint32_t z_mask() const { return z_; }
  std::uint32_t x_mask() const { return x_; }
  int phase_exponent() const { return phase_; }

  bool z_bit(std::size_t q) const { return (z_ >> q) & 1u; }
  bool x_bit(std::size_t q) const { return (x_ >> q) & 1u; }

  // Number of qubits with a non-identity factor.
  std::size_t weight() const;

  bool is_identity_bits() const { return z_ == 0 && x_ == 0; }

  // True when the operator is +/- a tensor product of I, X, Y, Z.
  bool is_hermitian() const;

  // +1 or -1 for a Hermitian operator; throws otherwise.
  int sign() const;

  PauliOperator adjoint() const;

  // Exact equality, including the tracked phase.
  bool operator==(const PauliOperator&) const = default;

  // Equality of the symplectic bits, ignoring phase.
  bool equal_up_to_phase(const PauliOperator& other) const {
    return n_ == other.n_ && z_ == other.z_ && x_ == other.x_;
  }

  // Symplectic product test: true iff the operators commute.
  bool commutes_with(const PauliOperator& other) const;

  // Phase-exact product; the dense matrix of the result equals the dense
  // matrix product of the factors.
  friend PauliOperator operator*(const PauliOperator& a,
                                 const PauliOperator& b);

  // Restriction to qubits [first, first+count), renormalized to a positive
  // Hermitian operator. The dropped phase is the caller's responsibility.
  PauliOperator sub_operator_hermitian(std::size_t first,
                                       std::size_t count) const;

  // Same bit restriction with an explicitly chosen phase exponent.
  PauliOperator sub_operator_with_phase(std::size_t first, std::size_t count,
                                        int phase) const;

  // In-place conjugation by elementary Clifford gates, P -> G P G'.
  void conj_h(std::size_t q);
  void conj_s(std::size_t q);
  void conj_cx(std::size_t control, std::size_t target);

  // Canonical text form. Hermitian operators render as [-]{I,X,Y,Z}^n and
  // round-trip through parse(); non-Hermitian ones get an i/-i prefix.
  std::string str() const;

  // Stable key over the symplectic bits, for dedup containers.
  std::uint64_t bits_key() const {
    return (static_cast<std::uint64_t>(z_) << 32) | x_;
  }

 private:
  void check_same_size(const PauliOperator& other) const;

  std::uint32_t z_ = 0;
  std::uint32_t x_ = 0;
  std::uint8_t phase_ = 0;
  std::uint8_t n_ = 0;
};

// All positive Hermitian Paulis of exact weight w on n qubits, ordered by
// position tuple (ascending, leftmost qubit first) and then by letter with
// X < Y < Z at each position. Sizes: C(n,w) * 3^w.
std::vector<PauliOperator> enumerate_pauli_errors(std::size_t n,
                                                  std::size_t w);

}  // namespace stego
