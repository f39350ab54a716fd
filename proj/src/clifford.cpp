#include "stego/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "stego/util.hpp"

namespace stego {

namespace {

// 10-bit symplectic vector of a 5-qubit operator: z bits 0..4, x bits 5..9.
std::uint32_t symplectic_bits(const PauliOperator& p) {
  return p.z_mask() | (p.x_mask() << 5);
}

// Coefficient row of the linear form v -> sp(v, w).
std::uint32_t symplectic_form_row(const PauliOperator& w) {
  return w.x_mask() | (w.z_mask() << 5);
}

PauliOperator pauli_from_bits(std::uint32_t bits) {
  const std::uint32_t z = bits & 0x1f;
  const std::uint32_t x = (bits >> 5) & 0x1f;
  return PauliOperator(5, z, x, std::popcount(z & x));
}

void conj_gate(PauliOperator& p, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::kH:
      p.conj_h(g.q0);
      break;
    case Gate::Kind::kS:
      p.conj_s(g.q0);
      break;
    case Gate::Kind::kCX:
      p.conj_cx(g.q0, g.q1);
      break;
  }
}

}  // namespace

std::string gates_to_text(const GateSequence& gates) {
  std::string out;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::kH:
        out += "H " + std::to_string(g.q0);
        break;
      case Gate::Kind::kS:
        out += "S " + std::to_string(g.q0);
        break;
      case Gate::Kind::kCX:
        out += "CX " + std::to_string(g.q0) + " " + std::to_string(g.q1);
        break;
    }
    out += '\n';
  }
  return out;
}

GateSequence gates_from_text(std::string_view text) {
  GateSequence gates;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    unsigned q0 = 0, q1 = 0;
    if (kind == "H" && fields >> q0) {
      gates.push_back({Gate::Kind::kH, std::uint8_t(q0)});
    } else if (kind == "S" && fields >> q0) {
      gates.push_back({Gate::Kind::kS, std::uint8_t(q0)});
    } else if (kind == "CX" && fields >> q0 >> q1) {
      gates.push_back({Gate::Kind::kCX, std::uint8_t(q0), std::uint8_t(q1)});
    } else {
      throw std::invalid_argument("bad gate line: " + line);
    }
  }
  return gates;
}

CliffordMap::CliffordMap(std::vector<PauliOperator> z_images,
                         std::vector<PauliOperator> x_images)
    : z_images_(std::move(z_images)), x_images_(std::move(x_images)) {}

CliffordMap CliffordMap::identity(std::size_t n) {
  std::vector<PauliOperator> z_images, x_images;
  for (std::size_t q = 0; q < n; ++q) {
    z_images.push_back(PauliOperator::single(n, q, 'Z'));
    x_images.push_back(PauliOperator::single(n, q, 'X'));
  }
  return CliffordMap(std::move(z_images), std::move(x_images));
}

CliffordMap CliffordMap::encoder_for(const StabilizerCode& code) {
  std::vector<PauliOperator> z_images(5), x_images(5);
  for (std::size_t j = 0; j < 4; ++j) z_images[j] = code.generator(j);
  z_images[4] = code.logical_z();
  x_images[4] = code.logical_x();

  // Destabilizers: d_j anticommutes with generator j alone and commutes with
  // everything else chosen so far. Solved over GF(2) with free variables
  // pinned to zero, which keeps the construction deterministic.
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<std::pair<std::uint32_t, int>> rows;
    for (std::size_t k = 0; k < 4; ++k) {
      rows.push_back({symplectic_form_row(code.generator(k)), k == j});
    }
    rows.push_back({symplectic_form_row(code.logical_z()), 0});
    rows.push_back({symplectic_form_row(code.logical_x()), 0});
    for (std::size_t i = 0; i < j; ++i) {
      rows.push_back({symplectic_form_row(x_images[i]), 0});
    }
    const auto solution = gf2_solve(std::move(rows), 10);
    if (!solution) {
      throw std::runtime_error(
          "destabilizer system is inconsistent; generator set is corrupt");
    }
    x_images[j] = pauli_from_bits(*solution);
  }

  CliffordMap map(std::move(z_images), std::move(x_images));
  map.check_valid();
  return map;
}

CliffordMap CliffordMap::from_circuit(std::size_t n,
                                      const GateSequence& gates) {
  CliffordMap map = identity(n);
  for (const Gate& g : gates) {
    if (g.q0 >= n || (g.kind == Gate::Kind::kCX && g.q1 >= n)) {
      throw std::invalid_argument("gate qubit out of range");
    }
    for (auto& row : map.z_images_) conj_gate(row, g);
    for (auto& row : map.x_images_) conj_gate(row, g);
  }
  return map;
}

PauliOperator CliffordMap::conjugate(const PauliOperator& p) const {
  const std::size_t n = num_qubits();
  if (p.num_qubits() != n) {
    throw std::invalid_argument("operator size does not match the map");
  }
  // p = i^phase * prod_q Z_q^{z_q} X_q^{x_q}; conjugation maps the product
  // factor by factor in the same order.
  PauliOperator acc(n, 0, 0, p.phase_exponent());
  for (std::size_t q = 0; q < n; ++q) {
    if (p.z_bit(q)) acc = acc * z_images_[q];
    if (p.x_bit(q)) acc = acc * x_images_[q];
  }
  return acc;
}

CliffordMap CliffordMap::inverse() const {
  const std::size_t n = num_qubits();
  if (n != 5) {
    throw std::logic_error("inverse is implemented for 5-qubit maps");
  }
  // The bit action of conjugation is linear: solve it for each target
  // generator, then pick the phase that makes the round trip exact.
  std::array<std::uint32_t, 10> image_bits;
  for (std::size_t i = 0; i < 5; ++i) {
    image_bits[i] = symplectic_bits(z_images_[i]);
    image_bits[5 + i] = symplectic_bits(x_images_[i]);
  }
  const auto solve_for = [&](const PauliOperator& target) {
    const std::uint32_t want = symplectic_bits(target);
    std::vector<std::pair<std::uint32_t, int>> rows;
    for (int bit = 0; bit < 10; ++bit) {
      std::uint32_t coeff = 0;
      for (int i = 0; i < 10; ++i) {
        coeff |= ((image_bits[i] >> bit) & 1u) << i;
      }
      rows.push_back({coeff, static_cast<int>((want >> bit) & 1u)});
    }
    const auto solution = gf2_solve(std::move(rows), 10);
    if (!solution) {
      throw std::runtime_error("clifford map is singular");
    }
    PauliOperator pre(5, *solution & 0x1f, (*solution >> 5) & 0x1f, 0);
    const PauliOperator forward = conjugate(pre);
    if (!forward.equal_up_to_phase(target)) {
      throw std::runtime_error("clifford inversion failed");
    }
    const int phase = target.phase_exponent() - forward.phase_exponent();
    return PauliOperator(5, pre.z_mask(), pre.x_mask(), phase);
  };

  std::vector<PauliOperator> z_inv, x_inv;
  for (std::size_t q = 0; q < 5; ++q) {
    z_inv.push_back(solve_for(PauliOperator::single(5, q, 'Z')));
  }
  for (std::size_t q = 0; q < 5; ++q) {
    x_inv.push_back(solve_for(PauliOperator::single(5, q, 'X')));
  }
  return CliffordMap(std::move(z_inv), std::move(x_inv));
}

void CliffordMap::check_valid() const {
  const std::size_t n = num_qubits();
  const auto require = [](bool cond, const char* what) {
    if (!cond) throw std::runtime_error(std::string("invalid clifford: ") + what);
  };
  for (std::size_t i = 0; i < n; ++i) {
    require(z_images_[i].is_hermitian(), "non-Hermitian Z image");
    require(x_images_[i].is_hermitian(), "non-Hermitian X image");
    for (std::size_t j = 0; j < n; ++j) {
      require(z_images_[i].commutes_with(z_images_[j]),
              "Z images must commute");
      require(x_images_[i].commutes_with(x_images_[j]),
              "X images must commute");
      const bool expect_commute = (i != j);
      require(z_images_[i].commutes_with(x_images_[j]) == expect_commute,
              "Z/X image pairing broken");
    }
  }
}

GateSequence clifford_to_circuit(const CliffordMap& map) {
  const std::size_t n = map.num_qubits();
  std::vector<PauliOperator> stab, destab;
  for (std::size_t q = 0; q < n; ++q) {
    stab.push_back(map.z_image(q));
    destab.push_back(map.x_image(q));
  }

  GateSequence ops;
  const auto apply = [&](Gate g) {
    for (auto& row : stab) conj_gate(row, g);
    for (auto& row : destab) conj_gate(row, g);
    ops.push_back(g);
  };
  const auto h = [&](std::size_t q) { apply({Gate::Kind::kH, std::uint8_t(q)}); };
  const auto s = [&](std::size_t q) { apply({Gate::Kind::kS, std::uint8_t(q)}); };
  const auto cx = [&](std::size_t c, std::size_t t) {
    apply({Gate::Kind::kCX, std::uint8_t(c), std::uint8_t(t)});
  };

  // Sweep the tableau to the identity, one qubit at a time. The gates that
  // fix qubit k only touch qubits >= k, so earlier columns stay reduced.
  for (std::size_t k = 0; k < n; ++k) {
    // Destabilizer row k: create an X pivot at column k.
    bool has_x = false;
    for (std::size_t q = k; q < n; ++q) has_x |= destab[k].x_bit(q);
    if (!has_x) {
      for (std::size_t q = k; q < n; ++q) {
        if (destab[k].z_bit(q)) {
          h(q);
          break;
        }
      }
    }
    std::size_t pivot = k;
    while (pivot < n && !destab[k].x_bit(pivot)) ++pivot;
    if (pivot == n) throw std::runtime_error("tableau sweep lost its pivot");
    if (pivot != k) {
      cx(k, pivot);
      cx(pivot, k);
      cx(k, pivot);
    }
    // Clear the remaining X bits of destabilizer row k.
    for (std::size_t q = 0; q < n; ++q) {
      if (q != k && destab[k].x_bit(q)) cx(k, q);
    }
    // Clear its Z bits.
    if (destab[k].z_mask() != 0) {
      if (!destab[k].z_bit(k)) s(k);
      for (std::size_t q = 0; q < n; ++q) {
        if (q != k && destab[k].z_bit(q)) cx(q, k);
      }
      s(k);
    }
    // Stabilizer row k: clear Z bits away from column k.
    for (std::size_t q = 0; q < n; ++q) {
      if (q != k && stab[k].z_bit(q)) cx(q, k);
    }
    // Then its X bits, conjugating through H so the destabilizer survives.
    if (stab[k].x_mask() != 0) {
      h(k);
      for (std::size_t q = 0; q < n; ++q) {
        if (q != k && stab[k].x_bit(q)) cx(k, q);
      }
      if (stab[k].z_bit(k)) s(k);
      h(k);
    }
  }

  // Fix signs: Z flips the X image's sign, X flips the Z image's sign.
  for (std::size_t k = 0; k < n; ++k) {
    if (!destab[k].equal_up_to_phase(PauliOperator::single(n, k, 'X')) ||
        !stab[k].equal_up_to_phase(PauliOperator::single(n, k, 'Z'))) {
      throw std::runtime_error("tableau sweep did not reach the identity");
    }
    if (destab[k].sign() < 0) {
      s(k);
      s(k);
    }
    if (stab[k].sign() < 0) {
      h(k);
      s(k);
      s(k);
      h(k);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (destab[k] != PauliOperator::single(n, k, 'X') ||
        stab[k] != PauliOperator::single(n, k, 'Z')) {
      throw std::runtime_error("tableau sweep left a sign behind");
    }
  }

  // ops reduce the target map to the identity, so the circuit is the
  // reversed sequence of inverse gates; S inverts as S S S.
  GateSequence circuit;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->kind == Gate::Kind::kS) {
      circuit.push_back(*it);
      circuit.push_back(*it);
      circuit.push_back(*it);
    } else {
      circuit.push_back(*it);
    }
  }
  return circuit;
}

EncoderBundle EncoderBundle::for_code(const StabilizerCode& code) {
  CliffordMap forward = CliffordMap::encoder_for(code);
  GateSequence circuit = clifford_to_circuit(forward);
  const CliffordMap extracted = CliffordMap::from_circuit(5, circuit);
  for (std::size_t q = 0; q < 5; ++q) {
    if (extracted.z_image(q) != forward.z_image(q) ||
        extracted.x_image(q) != forward.x_image(q)) {
      throw std::runtime_error("synthesized circuit does not match the map");
    }
  }
  CliffordMap inverse = forward.inverse();
  return EncoderBundle{std::move(forward), std::move(inverse),
                       std::move(circuit)};
}

EncodingTable derive_syndrome_swap_table(const CliffordMap& encoder,
                                         const StabilizerCode& code,
                                         const ErrorSet& errors) {
  const CliffordMap decoder = encoder.inverse();
  std::array<EncodingRow, 16> rows;
  for (std::size_t s = 0; s < 16; ++s) {
    const PauliOperator& encoded = errors[s];
    if (code.syndrome_of(encoded).value != s) {
      throw std::invalid_argument(
          "error set entry does not match its syndrome slot");
    }
    const PauliOperator pre = decoder.conjugate(encoded);
    const PauliOperator cover = pre.sub_operator_hermitian(4, 1);
    const PauliOperator ancilla = pre.sub_operator_with_phase(
        0, 4, pre.phase_exponent() - cover.phase_exponent());
    if (PauliOperator::tensor(ancilla, cover) != pre ||
        !ancilla.is_hermitian()) {
      throw std::runtime_error("pre-image does not split into E and O");
    }
    // The ancilla X-part must spell the raw syndrome: encoded anticommutes
    // with generator j exactly when the pre-image anticommutes with Z_j.
    std::uint8_t nibble = 0;
    for (std::size_t q = 0; q < 4; ++q) {
      if (ancilla.x_bit(q)) nibble |= 1u << (3 - q);
    }
    if (nibble != syndrome_printed_to_raw(static_cast<std::uint8_t>(s))) {
      throw std::runtime_error(
          "ancilla X-part does not equal the syndrome bits");
    }
    if (encoder.conjugate(pre) != encoded) {
      throw std::runtime_error("pre-image round trip failed");
    }
    rows[s] = EncodingRow{SyndromeLabel{std::uint8_t(s)}, ancilla, cover,
                          encoded};
  }
  return EncodingTable(std::move(rows));
}

TableSet derive_table_set(const CliffordMap& encoder,
                          const StabilizerCode& code) {
  TableSet set{derive_syndrome_swap_table(encoder, code,
                                          single_error_set(code)),
               {}};
  for (const ErrorSet& errors : partition_double_errors(code)) {
    set.doubles.push_back(derive_syndrome_swap_table(encoder, code, errors));
  }
  return set;
}

}  // namespace stego
