#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stego/pauli.hpp"

namespace stego {

// Printed 4-bit syndrome label, most significant bit first ("1000" = 8).
struct SyndromeLabel {
  std::uint8_t value = 0;

  std::string str() const;
  bool operator==(const SyndromeLabel&) const = default;
};

// The anticommutation bits (a1..a4) against the generators, in generator
// order with a1 most significant, relate to the printed label by a fixed
// permutation: printed (s1,s2,s3,s4) = (a4,a1,a3,a2). The permutation was
// fixed by matching the full reference syndrome table and is confirmed by
// verify_syndrome_table before anything downstream runs.
std::uint8_t syndrome_raw_to_printed(std::uint8_t raw) noexcept;
std::uint8_t syndrome_printed_to_raw(std::uint8_t printed) noexcept;

struct CheckMatrix {
  // Bit q of a row is qubit q, so row_string renders qubit 0 first.
  std::array<std::uint8_t, 4> z_rows{};
  std::array<std::uint8_t, 4> x_rows{};

  std::string z_row_string(std::size_t row) const;
  std::string x_row_string(std::size_t row) const;
};

struct VerificationReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  void note(std::string message) { notes.push_back(std::move(message)); }
};

// The [[5,1,3]] code: four stabilizer generators plus logical X/Z.
class StabilizerCode {
 public:
  // The perfect code with its canonical generators; construction self-checks
  // every invariant and throws on any mismatch.
  static StabilizerCode perfect_code();

  // Arbitrary generator set, mainly for negative controls in tests. With
  // validate=false the invariants are not enforced.
  static StabilizerCode with_generators(std::array<PauliOperator, 4> gens,
                                        PauliOperator logical_x,
                                        PauliOperator logical_z,
                                        bool validate = true);

  const std::array<PauliOperator, 4>& generators() const { return gens_; }
  const PauliOperator& generator(std::size_t j) const { return gens_[j]; }
  const PauliOperator& logical_x() const { return logical_x_; }
  const PauliOperator& logical_z() const { return logical_z_; }

  CheckMatrix check_matrix() const;

  // Anticommutation bits in generator order, a1 most significant.
  std::uint8_t syndrome_raw(const PauliOperator& error) const;

  // Printed syndrome label.
  SyndromeLabel syndrome_of(const PauliOperator& error) const;

 private:
  StabilizerCode(std::array<PauliOperator, 4> gens, PauliOperator lx,
                 PauliOperator lz);

  std::array<PauliOperator, 4> gens_;
  PauliOperator logical_x_;
  PauliOperator logical_z_;
};

// Checks the code against the reference syndrome table: every one of the 16
// reference operators must map to its printed label, and the map must be a
// bijection onto {0..15}.
VerificationReport verify_syndrome_table(const StabilizerCode& code);

// Sixteen errors indexed by printed syndrome value; entry 0 is the identity.
using ErrorSet = std::array<PauliOperator, 16>;

// Identity plus the fifteen single-qubit errors, keyed by syndrome.
ErrorSet single_error_set(const StabilizerCode& code);

// Deterministic partition of the ninety weight-2 errors into six sets, each
// holding exactly one error per nonzero syndrome plus the identity. Errors
// are assigned first-fit in enumeration order; this always succeeds because
// every nonzero syndrome class contains exactly six weight-2 errors.
std::array<ErrorSet, 6> partition_double_errors(const StabilizerCode& code);

}  // namespace stego
