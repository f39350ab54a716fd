#include "stego/perfect_code.hpp"

#include <stdexcept>

#include "stego/reference_tables.hpp"
#include "stego/util.hpp"

namespace stego {

std::string SyndromeLabel::str() const {
  std::string out(4, '0');
  for (int i = 0; i < 4; ++i) {
    if ((value >> (3 - i)) & 1u) out[i] = '1';
  }
  return out;
}

std::uint8_t syndrome_raw_to_printed(std::uint8_t raw) noexcept {
  const int a1 = (raw >> 3) & 1, a2 = (raw >> 2) & 1;
  const int a3 = (raw >> 1) & 1, a4 = raw & 1;
  return static_cast<std::uint8_t>((a4 << 3) | (a1 << 2) | (a3 << 1) | a2);
}

std::uint8_t syndrome_printed_to_raw(std::uint8_t printed) noexcept {
  const int s1 = (printed >> 3) & 1, s2 = (printed >> 2) & 1;
  const int s3 = (printed >> 1) & 1, s4 = printed & 1;
  return static_cast<std::uint8_t>((s2 << 3) | (s4 << 2) | (s3 << 1) | s1);
}

std::string CheckMatrix::z_row_string(std::size_t row) const {
  return bits_to_string(z_rows.at(row), 5);
}

std::string CheckMatrix::x_row_string(std::size_t row) const {
  return bits_to_string(x_rows.at(row), 5);
}

StabilizerCode::StabilizerCode(std::array<PauliOperator, 4> gens,
                               PauliOperator lx, PauliOperator lz)
    : gens_(std::move(gens)),
      logical_x_(std::move(lx)),
      logical_z_(std::move(lz)) {}

StabilizerCode StabilizerCode::perfect_code() {
  std::array<PauliOperator, 4> gens;
  for (std::size_t j = 0; j < 4; ++j) {
    gens[j] = PauliOperator::parse(reference::kGenerators[j]);
  }
  return with_generators(std::move(gens),
                         PauliOperator::parse(reference::kLogicalX),
                         PauliOperator::parse(reference::kLogicalZ),
                         /*validate=*/true);
}

StabilizerCode StabilizerCode::with_generators(
    std::array<PauliOperator, 4> gens, PauliOperator logical_x,
    PauliOperator logical_z, bool validate) {
  StabilizerCode code(std::move(gens), std::move(logical_x),
                      std::move(logical_z));
  if (validate) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (code.gens_[j].num_qubits() != 5) {
        throw std::invalid_argument("generator is not a 5-qubit operator");
      }
      for (std::size_t k = j + 1; k < 4; ++k) {
        if (!code.gens_[j].commutes_with(code.gens_[k])) {
          throw std::invalid_argument("stabilizer generators must commute");
        }
      }
      if (!code.logical_x_.commutes_with(code.gens_[j]) ||
          !code.logical_z_.commutes_with(code.gens_[j])) {
        throw std::invalid_argument(
            "logical operators must commute with the stabilizer");
      }
    }
    if (code.logical_x_.commutes_with(code.logical_z_)) {
      throw std::invalid_argument("logical X and Z must anticommute");
    }
    std::vector<std::uint32_t> rows;
    for (const auto& g : code.gens_) {
      rows.push_back(g.z_mask() | (g.x_mask() << 5));
    }
    if (gf2_rank(rows) != 4) {
      throw std::invalid_argument("stabilizer generators are dependent");
    }
  }
  return code;
}

CheckMatrix StabilizerCode::check_matrix() const {
  CheckMatrix m;
  for (std::size_t j = 0; j < 4; ++j) {
    m.z_rows[j] = static_cast<std::uint8_t>(gens_[j].z_mask());
    m.x_rows[j] = static_cast<std::uint8_t>(gens_[j].x_mask());
  }
  return m;
}

std::uint8_t StabilizerCode::syndrome_raw(const PauliOperator& error) const {
  std::uint8_t raw = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (!error.commutes_with(gens_[j])) raw |= 1u << (3 - j);
  }
  return raw;
}

SyndromeLabel StabilizerCode::syndrome_of(const PauliOperator& error) const {
  return SyndromeLabel{syndrome_raw_to_printed(syndrome_raw(error))};
}

VerificationReport verify_syndrome_table(const StabilizerCode& code) {
  VerificationReport report;
  std::array<bool, 16> seen{};
  std::size_t matches = 0;
  for (const auto& entry : reference::kSyndromeTable) {
    const auto error = PauliOperator::parse(entry.error);
    const auto label = code.syndrome_of(error);
    if (label.str() == entry.syndrome) {
      ++matches;
    } else {
      report.fail(std::string("syndrome mismatch for ") +
                  std::string(entry.error) + ": got " + label.str() +
                  ", reference says " + std::string(entry.syndrome));
    }
    if (seen[label.value]) {
      report.fail("syndrome " + label.str() + " assigned twice");
    }
    seen[label.value] = true;
  }
  for (int s = 0; s < 16; ++s) {
    if (!seen[s]) {
      report.fail("syndrome " + SyndromeLabel{std::uint8_t(s)}.str() +
                  " never produced; map is not a bijection");
    }
  }
  report.note("syndrome table: " + std::to_string(matches) + "/16 matches");
  return report;
}

ErrorSet single_error_set(const StabilizerCode& code) {
  ErrorSet set;
  set[0] = PauliOperator(5);
  std::array<bool, 16> filled{};
  filled[0] = true;
  for (const auto& error : enumerate_pauli_errors(5, 1)) {
    const auto label = code.syndrome_of(error);
    if (filled[label.value]) {
      throw std::runtime_error(
          "single-qubit errors do not have distinct syndromes");
    }
    set[label.value] = error;
    filled[label.value] = true;
  }
  return set;
}

std::array<ErrorSet, 6> partition_double_errors(const StabilizerCode& code) {
  std::array<ErrorSet, 6> sets;
  std::array<std::size_t, 16> filled{};
  for (auto& set : sets) set[0] = PauliOperator(5);
  for (const auto& error : enumerate_pauli_errors(5, 2)) {
    const auto label = code.syndrome_of(error);
    if (label.value == 0) {
      throw std::runtime_error("weight-2 error with zero syndrome: " +
                               error.str());
    }
    const std::size_t slot = filled[label.value]++;
    if (slot >= 6) {
      throw std::runtime_error("syndrome class has more than six members");
    }
    sets[slot][label.value] = error;
  }
  for (int s = 1; s < 16; ++s) {
    if (filled[s] != 6) {
      throw std::runtime_error("syndrome class " +
                               SyndromeLabel{std::uint8_t(s)}.str() +
                               " does not have six members");
    }
  }
  return sets;
}

}  // namespace stego
