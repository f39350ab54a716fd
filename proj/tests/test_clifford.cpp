#include "stego/clifford.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "stego/reference_tables.hpp"

using namespace stego;

namespace {

PauliOperator random_pauli5(std::mt19937_64& rng) {
  return PauliOperator(5, static_cast<std::uint32_t>(rng()) & 31,
                       static_cast<std::uint32_t>(rng()) & 31,
                       static_cast<int>(rng() & 3));
}

const StabilizerCode& code() {
  static const StabilizerCode c = StabilizerCode::perfect_code();
  return c;
}

const CliffordMap& encoder() {
  static const CliffordMap map = CliffordMap::encoder_for(code());
  return map;
}

}  // namespace

TEST_CASE("encoder images hit the stabilizer generators") {
  const auto& map = encoder();
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(map.z_image(j) == code().generator(j));
  }
  CHECK(map.z_image(4) == code().logical_z());
  CHECK(map.x_image(4) == code().logical_x());
  CHECK(map.conjugate(PauliOperator::single(5, 0, 'Z')) ==
        PauliOperator::parse("XZZXI"));
  CHECK(!map.conjugate(PauliOperator::single(5, 4, 'X'))
             .commutes_with(map.conjugate(PauliOperator::single(5, 4, 'Z'))));
  map.check_valid();
}

TEST_CASE("conjugation is a phase-exact homomorphism") {
  const auto& map = encoder();
  std::mt19937_64 rng(41);

  CHECK(map.conjugate(PauliOperator(5)) == PauliOperator(5));

  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_pauli5(rng);
    const auto b = random_pauli5(rng);
    CHECK(map.conjugate(a * b) == map.conjugate(a) * map.conjugate(b));
  }
}

TEST_CASE("inverse map undoes conjugation exactly") {
  const auto& map = encoder();
  const auto inv = map.inverse();
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_pauli5(rng);
    CHECK(map.conjugate(inv.conjugate(p)) == p);
    CHECK(inv.conjugate(map.conjugate(p)) == p);
  }
  inv.check_valid();
}

TEST_CASE("ancilla X-part equals the anticommutation vector") {
  const auto& map = encoder();
  const auto inv = map.inverse();
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_pauli5(rng);
    const auto pre = inv.conjugate(f);
    for (std::size_t j = 0; j < 4; ++j) {
      const bool anticommutes = !f.commutes_with(code().generator(j));
      CHECK(pre.x_bit(j) == anticommutes);
    }
  }
}

TEST_CASE("synthesized circuit reproduces the map") {
  const auto& map = encoder();
  const auto circuit = clifford_to_circuit(map);
  CHECK(circuit.size() <= 200);

  const auto extracted = CliffordMap::from_circuit(5, circuit);
  for (std::size_t q = 0; q < 5; ++q) {
    CHECK(extracted.z_image(q) == map.z_image(q));
    CHECK(extracted.x_image(q) == map.x_image(q));
  }
}

TEST_CASE("circuit synthesis handles random cliffords") {
  std::mt19937_64 rng(53);
  // Random circuits in, equal tableaus out.
  for (int trial = 0; trial < 25; ++trial) {
    GateSequence gates;
    for (int g = 0; g < 40; ++g) {
      const int kind = static_cast<int>(rng() % 3);
      const auto q0 = static_cast<std::uint8_t>(rng() % 5);
      auto q1 = static_cast<std::uint8_t>(rng() % 5);
      while (q1 == q0) q1 = static_cast<std::uint8_t>(rng() % 5);
      if (kind == 0) gates.push_back({Gate::Kind::kH, q0});
      if (kind == 1) gates.push_back({Gate::Kind::kS, q0});
      if (kind == 2) gates.push_back({Gate::Kind::kCX, q0, q1});
    }
    const auto target = CliffordMap::from_circuit(5, gates);
    const auto resynth = CliffordMap::from_circuit(5, clifford_to_circuit(target));
    for (std::size_t q = 0; q < 5; ++q) {
      CHECK(resynth.z_image(q) == target.z_image(q));
      CHECK(resynth.x_image(q) == target.x_image(q));
    }
  }
}

TEST_CASE("gate text round-trips") {
  const auto circuit = clifford_to_circuit(encoder());
  const auto text = gates_to_text(circuit);
  CHECK(gates_from_text(text) == circuit);
  CHECK_THROWS_AS(gates_from_text("H\n"), std::invalid_argument);

  const GateSequence sample = {{Gate::Kind::kH, 0},
                               {Gate::Kind::kS, 3},
                               {Gate::Kind::kCX, 0, 4}};
  CHECK(gates_to_text(sample) == "H 0\nS 3\nCX 0 4\n");
}

TEST_CASE("the highlighted reference encoding forms a valid table") {
  // Row kHighlightedEncoding of every two-qubit group, plus the no-error
  // row, is one complete encoding.
  ErrorSet errors;
  errors[0] = PauliOperator(5);
  for (const auto& group : reference::kDoubleErrorGroups) {
    const auto e = PauliOperator::parse(
        group.rows[reference::kHighlightedEncoding].encoded);
    errors[code().syndrome_of(e).value] = e;
  }
  const auto bundle = EncoderBundle::for_code(code());
  const auto table = derive_syndrome_swap_table(bundle.forward, code(), errors);
  CHECK(validate_encoding_table(code(), table, WeightProfile::kDoubleError)
            .ok());
}

TEST_CASE("derived single-error table has the swap structure") {
  const auto bundle = EncoderBundle::for_code(code());
  const auto table =
      derive_syndrome_swap_table(bundle.forward, code(), single_error_set(code()));

  const auto report =
      validate_encoding_table(code(), table, WeightProfile::kSingleError);
  CHECK(report.ok());

  for (int s = 0; s < 16; ++s) {
    const auto& row = table.row(static_cast<std::uint8_t>(s));
    CHECK(row.ancilla_op.is_hermitian());
    CHECK(row.cover_op.sign() == 1);
    // Pre-image conjugates forward to the encoded error, phase included.
    CHECK(bundle.forward.conjugate(row.pre_image()) == row.encoded_error);
  }
  const auto& zero = table.row(0);
  CHECK(zero.ancilla_op.is_identity_bits());
  CHECK(zero.cover_op.is_identity_bits());

  // Nibble indexing: the row for nibble k has ancilla X-part k.
  for (std::uint8_t k = 0; k < 16; ++k) {
    const auto& row = table.row_for_nibble(k);
    std::uint8_t nibble = 0;
    for (std::size_t q = 0; q < 4; ++q) {
      if (row.ancilla_op.x_bit(q)) nibble |= 1u << (3 - q);
    }
    CHECK(nibble == k);
  }
}

TEST_CASE("derived double-error tables validate") {
  const auto bundle = EncoderBundle::for_code(code());
  const auto set = derive_table_set(bundle.forward, code());
  REQUIRE(set.doubles.size() == 6);
  for (const auto& table : set.doubles) {
    CHECK(validate_encoding_table(code(), table, WeightProfile::kDoubleError)
              .ok());
  }
  CHECK(&set.for_class_id(1) == &set.single);
  CHECK(&set.for_class_id(7) == &set.doubles[5]);
  CHECK_THROWS_AS(set.for_class_id(0), std::invalid_argument);
}

TEST_CASE("reference single-error table validates as a table") {
  // The reference ancilla/cover columns come from a different encoding
  // circuit; only the encoded-error structure is required to hold.
  std::array<EncodingRow, 16> rows;
  for (std::size_t s = 0; s < 16; ++s) {
    const auto& entry = reference::kSingleErrorTable[s];
    rows[s] = EncodingRow{SyndromeLabel{std::uint8_t(s)},
                          PauliOperator::parse(entry.ancilla),
                          PauliOperator::parse(entry.cover),
                          PauliOperator::parse(entry.encoded)};
  }
  const EncodingTable table(std::move(rows));
  CHECK(validate_encoding_table(code(), table, WeightProfile::kSingleError)
            .ok());
}

TEST_CASE("duplicated syndrome rows fail table parsing") {
  const auto bundle = EncoderBundle::for_code(code());
  const auto table =
      derive_syndrome_swap_table(bundle.forward, code(), single_error_set(code()));
  auto text = serialize_encoding_table(table);
  // Duplicate the second line over the third.
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  lines[2] = lines[1];
  std::string bad;
  for (const auto& l : lines) bad += l + "\n";
  CHECK_THROWS_AS(parse_encoding_table(bad), std::invalid_argument);
}

TEST_CASE("encoding tables serialize byte-identically") {
  const auto bundle = EncoderBundle::for_code(code());
  const auto set = derive_table_set(bundle.forward, code());
  const auto text = serialize_table_set(set);
  const auto parsed = parse_table_set(text);
  CHECK(serialize_table_set(parsed) == text);

  const auto single_text = serialize_encoding_table(set.single);
  CHECK(serialize_encoding_table(parse_encoding_table(single_text)) ==
        single_text);
}
