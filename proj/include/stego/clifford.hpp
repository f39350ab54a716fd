#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stego/encoding_table.hpp"
#include "stego/pauli.hpp"
#include "stego/perfect_code.hpp"

namespace stego {

struct Gate {
  enum class Kind : std::uint8_t { kH, kS, kCX };
  Kind kind;
  std::uint8_t q0;
  std::uint8_t q1 = 0;  // target, CX only

  bool operator==(const Gate&) const = default;
};

using GateSequence = std::vector<Gate>;

// One gate per line: "H q", "S q", "CX c t" with 0-indexed qubits.
std::string gates_to_text(const GateSequence& gates);
GateSequence gates_from_text(std::string_view text);

// A Clifford unitary represented by the conjugation images of the
// single-qubit Z and X operators.
class CliffordMap {
 public:
  static CliffordMap identity(std::size_t n);

  // Encoder for the code: Z images on the first four qubits are the
  // stabilizer generators in order, the last qubit's Z/X images are the
  // logical Z/X, and the remaining X images (destabilizers) are completed
  // deterministically by solving the symplectic constraints over GF(2).
  static CliffordMap encoder_for(const StabilizerCode& code);

  // Tableau of a circuit, gates applied in list order.
  static CliffordMap from_circuit(std::size_t n, const GateSequence& gates);

  std::size_t num_qubits() const { return z_images_.size(); }
  const PauliOperator& z_image(std::size_t q) const { return z_images_[q]; }
  const PauliOperator& x_image(std::size_t q) const { return x_images_[q]; }

  // U p U', computed by composing images along the symplectic decomposition
  // of p. Conjugation is a phase-exact group homomorphism.
  PauliOperator conjugate(const PauliOperator& p) const;

  // Tableau of the inverse unitary.
  CliffordMap inverse() const;

  // Throws unless the images realize a valid Clifford (symplectic relations
  // preserved and every image Hermitian).
  void check_valid() const;

 private:
  CliffordMap(std::vector<PauliOperator> z_images,
              std::vector<PauliOperator> x_images);

  std::vector<PauliOperator> z_images_;
  std::vector<PauliOperator> x_images_;
};

// H/S/CX realization of the map; conjugating through the returned gates
// reproduces every image exactly, including signs.
GateSequence clifford_to_circuit(const CliffordMap& map);

// Forward and inverse map plus the synthesized circuit, bundled for use by
// the simulator and the protocol.
struct EncoderBundle {
  CliffordMap forward;
  CliffordMap inverse;
  GateSequence circuit;

  static EncoderBundle for_code(const StabilizerCode& code);
};

// Builds the encoding table for one error set: each encoded error F with
// syndrome s is pulled back through the encoder, and the pre-image splits
// into a 4-qubit ancilla part and a 1-qubit cover part. The ancilla X-part
// always equals the raw (generator-order) syndrome bits of F; this is
// checked and a violation throws.
EncodingTable derive_syndrome_swap_table(const CliffordMap& encoder,
                                         const StabilizerCode& code,
                                         const ErrorSet& errors);

// Derived tables in force by default: the single-error encoding plus the six
// double-error encodings from the deterministic partition.
TableSet derive_table_set(const CliffordMap& encoder,
                          const StabilizerCode& code);

}  // namespace stego
