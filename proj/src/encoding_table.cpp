#include "stego/encoding_table.hpp"

#include <sstream>
#include <stdexcept>

namespace stego {

EncodingTable::EncodingTable(std::array<EncodingRow, 16> rows)
    : rows_(std::move(rows)) {
  for (std::size_t s = 0; s < 16; ++s) {
    if (rows_[s].syndrome.value != s) {
      throw std::invalid_argument("encoding rows must be stored by syndrome");
    }
    if (rows_[s].ancilla_op.num_qubits() != 4 ||
        rows_[s].cover_op.num_qubits() != 1 ||
        rows_[s].encoded_error.num_qubits() != 5) {
      throw std::invalid_argument("encoding row has wrong operator sizes");
    }
  }
}

VerificationReport validate_encoding_table(const StabilizerCode& code,
                                           const EncodingTable& table,
                                           WeightProfile profile) {
  VerificationReport report;
  for (std::size_t s = 0; s < 16; ++s) {
    const EncodingRow& row = table.row(static_cast<std::uint8_t>(s));
    const auto label = code.syndrome_of(row.encoded_error);
    if (label.value != s) {
      report.fail("row " + row.syndrome.str() + ": encoded error " +
                  row.encoded_error.str() + " has syndrome " + label.str());
    }
    if (s == 0) {
      if (!row.encoded_error.is_identity_bits() ||
          !row.ancilla_op.is_identity_bits() ||
          !row.cover_op.is_identity_bits()) {
        report.fail("zero-syndrome row must be all identity");
      }
      continue;
    }
    const std::size_t w = row.encoded_error.weight();
    if (profile == WeightProfile::kSingleError && w > 1) {
      report.fail("row " + row.syndrome.str() + ": weight " +
                  std::to_string(w) + " exceeds the single-error profile");
    }
    if (profile == WeightProfile::kDoubleError && w != 2) {
      report.fail("row " + row.syndrome.str() + ": weight " +
                  std::to_string(w) + " violates the double-error profile");
    }
  }
  return report;
}

std::string serialize_encoding_table(const EncodingTable& table) {
  std::string out;
  for (const auto& row : table.rows()) {
    out += row.syndrome.str();
    out += '\t';
    out += row.ancilla_op.str();
    out += '\t';
    out += row.cover_op.str();
    out += '\t';
    out += row.encoded_error.str();
    out += '\n';
  }
  return out;
}

namespace {

SyndromeLabel parse_label(const std::string& text) {
  if (text.size() != 4) throw std::invalid_argument("bad syndrome: " + text);
  std::uint8_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bad syndrome: " + text);
    }
    value = static_cast<std::uint8_t>((value << 1) | (c == '1'));
  }
  return SyndromeLabel{value};
}

EncodingRow parse_row(const std::string& line) {
  std::istringstream in(line);
  std::string syndrome, ancilla, cover, encoded;
  if (!std::getline(in, syndrome, '\t') || !std::getline(in, ancilla, '\t') ||
      !std::getline(in, cover, '\t') || !std::getline(in, encoded)) {
    throw std::invalid_argument("bad encoding table line: " + line);
  }
  return EncodingRow{parse_label(syndrome), PauliOperator::parse(ancilla),
                     PauliOperator::parse(cover),
                     PauliOperator::parse(encoded)};
}

}  // namespace

EncodingTable parse_encoding_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::array<EncodingRow, 16> rows;
  std::array<bool, 16> seen{};
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (count >= 16) throw std::invalid_argument("more than 16 table rows");
    const EncodingRow row = parse_row(line);
    if (seen[row.syndrome.value]) {
      throw std::invalid_argument("duplicate syndrome row " +
                                  row.syndrome.str());
    }
    seen[row.syndrome.value] = true;
    rows[row.syndrome.value] = row;
    ++count;
  }
  if (count != 16) {
    throw std::invalid_argument("encoding table needs 16 rows, got " +
                                std::to_string(count));
  }
  return EncodingTable(std::move(rows));
}

const EncodingTable& TableSet::for_class_id(std::size_t id) const {
  if (id == 1) return single;
  if (id >= 2 && id <= 7) return doubles.at(id - 2);
  throw std::invalid_argument("table class id must be 1..7");
}

std::string serialize_table_set(const TableSet& set) {
  std::string out = serialize_encoding_table(set.single);
  for (const auto& table : set.doubles) {
    out += '\n';
    out += serialize_encoding_table(table);
  }
  return out;
}

TableSet parse_table_set(std::string_view text) {
  std::vector<std::string> blocks;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      current += line;
      current += '\n';
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  if (blocks.size() != 7) {
    throw std::invalid_argument("table set needs 7 blocks, got " +
                                std::to_string(blocks.size()));
  }
  TableSet set{parse_encoding_table(blocks[0]), {}};
  for (std::size_t i = 1; i < 7; ++i) {
    set.doubles.push_back(parse_encoding_table(blocks[i]));
  }
  return set;
}

}  // namespace stego
