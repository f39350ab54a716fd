#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stego/clifford.hpp"
#include "stego/encoding_table.hpp"
#include "stego/pauli.hpp"

namespace stego {

// Dense amplitude vector over up to 9 qubits for exact protocol checks.
// Qubit 0 is the most significant bit of the amplitude index, matching the
// leftmost character of Pauli text forms and the printed syndrome labels.
class StateVector {
 public:
  using cplx = std::complex<double>;

  // |0...0> on n qubits.
  explicit StateVector(std::size_t n);

  static StateVector basis(std::size_t n, std::size_t index);

  // cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static StateVector single_qubit(double theta, double phi);

  // Haar-like random state from complex Gaussian amplitudes.
  static StateVector random_state(std::size_t n, std::mt19937_64& rng);

  // lhs qubits become the most significant block of the result.
  static StateVector tensor(const StateVector& lhs, const StateVector& rhs);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  cplx amplitude(std::size_t index) const { return amps_[index]; }

  double norm_squared() const;

  std::complex<double> inner(const StateVector& other) const;

  // |<a|b>|^2; equals 1 exactly when the states agree up to global phase.
  double fidelity(const StateVector& other) const;

  void apply_h(std::size_t qubit);
  void apply_s(std::size_t qubit, bool dagger = false);
  void apply_cx(std::size_t control, std::size_t target);

  // Gate sequence on qubits [offset, offset + 5); inverse=true applies the
  // adjoint circuit.
  void apply_gates(const GateSequence& gates, std::size_t offset,
                   bool inverse = false);

  // Pauli on qubits [offset, offset + p.num_qubits()), phase-exact.
  void apply_pauli(const PauliOperator& p, std::size_t offset);

  // True when the probability of any 1 among the given qubits is below tol.
  bool register_is_zero(std::size_t first, std::size_t count,
                        double tol) const;

  // Debug dump, one line per amplitude: index<TAB>re<TAB>im.
  std::string dump() const;

  std::vector<cplx>& amplitudes() { return amps_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

 private:
  std::size_t bit_of_qubit(std::size_t qubit) const { return n_ - 1 - qubit; }

  std::size_t n_;
  std::vector<cplx> amps_;
};

enum class SwapDirection { kForward, kInverse };

// The two swap unitaries on the 9-qubit register (stego qubits 0..3,
// ancilla 4..7, cover 8). U1 applies the table row paired with each stego
// basis value to the ancilla and cover; U2 applies X^j to the stego register
// controlled on the ancilla basis value j. Forward order is U1 then U2; both
// factors are involutions, so the inverse is U2 then U1.
void apply_syndrome_swap(StateVector& state, const EncodingTable& table,
                         SwapDirection direction);

}  // namespace stego
