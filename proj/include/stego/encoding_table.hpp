#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stego/pauli.hpp"
#include "stego/perfect_code.hpp"

namespace stego {

// One encoding row: applying ancilla_op (x) cover_op before the encoder is
// equivalent to applying encoded_error after it.
struct EncodingRow {
  SyndromeLabel syndrome;
  PauliOperator ancilla_op;    // 4 qubits, Hermitian, sign +/-
  PauliOperator cover_op;      // 1 qubit, Hermitian, sign +
  PauliOperator encoded_error; // 5 qubits

  // The full 5-qubit pre-encoding operator.
  PauliOperator pre_image() const {
    return PauliOperator::tensor(ancilla_op, cover_op);
  }
};

// Sixteen rows, one per syndrome, stored by printed syndrome value.
class EncodingTable {
 public:
  explicit EncodingTable(std::array<EncodingRow, 16> rows);

  const EncodingRow& row(std::uint8_t printed_syndrome) const {
    return rows_.at(printed_syndrome);
  }

  // Row whose ancilla X-part equals the nibble, i.e. the row the swap unitary
  // pairs with stego basis state |nibble>. The nibble is the raw
  // (generator-order) syndrome of the row's encoded error.
  const EncodingRow& row_for_nibble(std::uint8_t nibble) const {
    return rows_.at(syndrome_raw_to_printed(nibble));
  }

  const std::array<EncodingRow, 16>& rows() const { return rows_; }

 private:
  std::array<EncodingRow, 16> rows_;
};

enum class WeightProfile { kSingleError, kDoubleError };

// Checks the table invariants: syndromes 0..15 each exactly once, encoded
// errors reproduce their row syndromes, the zero row is all-identity, and the
// encoded errors match the declared weight profile (weight <= 1 everywhere,
// or weight 2 on every nonzero row).
VerificationReport validate_encoding_table(const StabilizerCode& code,
                                           const EncodingTable& table,
                                           WeightProfile profile);

// Line format: syndrome<TAB>E<TAB>O<TAB>encoded_error, sixteen lines in
// syndrome order. Files round-trip byte-identically.
std::string serialize_encoding_table(const EncodingTable& table);
EncodingTable parse_encoding_table(std::string_view text);

// The tables in force for a protocol run: the single-error encoding plus the
// six double-error encodings.
struct TableSet {
  EncodingTable single;
  std::vector<EncodingTable> doubles;  // size 6

  const EncodingTable& for_class_id(std::size_t id) const;  // 1..7
};

std::string serialize_table_set(const TableSet& set);
TableSet parse_table_set(std::string_view text);

}  // namespace stego
