#include "stego/protocol.hpp"

#include <sstream>
#include <stdexcept>

namespace stego {

namespace {

constexpr std::uint64_t kRangeFloor = std::uint64_t{1} << 40;

}  // namespace

EncodingClass EncodingClass::from_id(std::size_t id) {
  if (id == 0) return {Kind::kTrivial, 0};
  if (id == 1) return {Kind::kSingleError, 0};
  if (id <= 7) return {Kind::kDoubleError, static_cast<std::uint8_t>(id - 2)};
  throw std::invalid_argument("class id must be 0..7");
}

std::size_t EncodingClass::id() const {
  switch (kind) {
    case Kind::kTrivial:
      return 0;
    case Kind::kSingleError:
      return 1;
    case Kind::kDoubleError:
      return 2 + double_index;
  }
  throw std::logic_error("bad class kind");
}

std::string EncodingClass::str() const {
  switch (kind) {
    case Kind::kTrivial:
      return "trivial";
    case Kind::kSingleError:
      return "single";
    case Kind::kDoubleError:
      return "double" + std::to_string(double_index + 1);
  }
  throw std::logic_error("bad class kind");
}

EncodingClass EncodingClass::parse(const std::string& text) {
  if (text == "trivial") return {Kind::kTrivial, 0};
  if (text == "single") return {Kind::kSingleError, 0};
  if (text.size() == 7 && text.substr(0, 6) == "double" && text[6] >= '1' &&
      text[6] <= '6') {
    return {Kind::kDoubleError, static_cast<std::uint8_t>(text[6] - '1')};
  }
  throw std::invalid_argument("bad class name: " + text);
}

ClassSelector::ClassSelector(const EncodingFractions& fractions) {
  if (fractions.q0 < 0.0 || fractions.q1 < 0.0 || fractions.q2 < 0.0) {
    throw std::invalid_argument("encoding fractions must be nonnegative");
  }
  const double total = fractions.sum();
  if (!(total > 0.0)) {
    throw std::invalid_argument("encoding fractions sum to zero");
  }
  probs_[0] = fractions.q0 / total;
  probs_[1] = fractions.q1 / total;
  for (int m = 0; m < 6; ++m) probs_[2 + m] = fractions.q2 / (6.0 * total);
  cumulative_[0] = 0.0;
  for (int c = 0; c < 8; ++c) cumulative_[c + 1] = cumulative_[c] + probs_[c];
  cumulative_[8] = 1.0;
}

EncodingClass ClassSelector::next(KeyStream& key) {
  while (range_ < kRangeFloor) {
    range_ <<= 1;
    value_ = (value_ << 1) | static_cast<std::uint64_t>(key.next_bit());
  }
  std::uint64_t lo = 0;
  for (int c = 0; c < 8; ++c) {
    std::uint64_t hi =
        (c == 7) ? range_
                 : static_cast<std::uint64_t>(
                       static_cast<double>(range_) * cumulative_[c + 1]);
    if (hi > range_) hi = range_;
    if (hi < lo) hi = lo;
    if (value_ >= lo && value_ < hi) {
      value_ -= lo;
      range_ = hi - lo;
      return EncodingClass::from_id(c);
    }
    lo = hi;
  }
  throw std::logic_error("range decoder failed to place the code value");
}

TwirlLayer TwirlLayer::draw(KeyStream& key) {
  TwirlLayer layer;
  for (std::size_t q = 0; q < 4; ++q) {
    const std::uint32_t pair = key.next_bits(2);
    switch (pair) {
      case 0:
        layer.ops[q] = PauliOperator(1);
        break;
      case 1:
        layer.ops[q] = PauliOperator::single(1, 0, 'X');
        break;
      case 2:
        layer.ops[q] = PauliOperator::single(1, 0, 'Z');
        break;
      default:
        layer.ops[q] = PauliOperator::single(1, 0, 'Y');
        break;
    }
  }
  return layer;
}

std::uint8_t TwirlLayer::x_nibble() const {
  std::uint8_t nibble = 0;
  for (std::size_t q = 0; q < 4; ++q) {
    if (ops[q].x_bit(0)) nibble |= 1u << (3 - q);
  }
  return nibble;
}

void TwirlLayer::apply(StateVector& state) const {
  for (std::size_t q = 0; q < 4; ++q) {
    if (!ops[q].is_identity_bits() || ops[q].phase_exponent() != 0) {
      state.apply_pauli(ops[q], q);
    }
  }
}

ProtocolContext ProtocolContext::standard(const ProtocolConfig& config) {
  encoding_fractions(config.p);  // domain check
  StabilizerCode code = StabilizerCode::perfect_code();
  EncoderBundle encoder = EncoderBundle::for_code(code);
  TableSet tables = derive_table_set(encoder.forward, code);
  return ProtocolContext{std::move(code), std::move(encoder),
                         std::move(tables), config};
}

ProtocolContext ProtocolContext::with_tables(const ProtocolConfig& config,
                                             TableSet tables) {
  encoding_fractions(config.p);
  StabilizerCode code = StabilizerCode::perfect_code();
  EncoderBundle encoder = EncoderBundle::for_code(code);
  const auto check = [&](const EncodingTable& table, WeightProfile profile) {
    const auto report = validate_encoding_table(code, table, profile);
    if (!report.ok()) {
      throw std::invalid_argument("loaded table is invalid: " +
                                  report.failures.front());
    }
  };
  check(tables.single, WeightProfile::kSingleError);
  if (tables.doubles.size() != 6) {
    throw std::invalid_argument("table set needs six double-error tables");
  }
  for (const auto& t : tables.doubles) check(t, WeightProfile::kDoubleError);
  // Re-derive the ancilla/cover operators against this encoder so the exact
  // path stays consistent regardless of where the error sets came from.
  TableSet rebuilt{tables.single, {}};
  {
    ErrorSet errors;
    for (std::size_t s = 0; s < 16; ++s) {
      errors[s] = tables.single.row(std::uint8_t(s)).encoded_error;
    }
    rebuilt.single = derive_syndrome_swap_table(encoder.forward, code, errors);
  }
  for (const auto& t : tables.doubles) {
    ErrorSet errors;
    for (std::size_t s = 0; s < 16; ++s) {
      errors[s] = t.row(std::uint8_t(s)).encoded_error;
    }
    rebuilt.doubles.push_back(
        derive_syndrome_swap_table(encoder.forward, code, errors));
  }
  return ProtocolContext{std::move(code), std::move(encoder),
                         std::move(rebuilt), config};
}

StateVector ProtocolContext::cover_state() const {
  return StateVector::single_qubit(config.cover_theta, config.cover_phi);
}

StateVector ProtocolContext::clean_codeword() const {
  StateVector state =
      StateVector::tensor(StateVector::basis(4, 0), cover_state());
  state.apply_gates(encoder.circuit, 0);
  return state;
}

std::string serialize_transcript(const Transcript& transcript) {
  std::string out;
  for (const auto& record : transcript.records) {
    out += std::to_string(record.index);
    out += '\t';
    out += record.cls.str();
    out += '\t';
    out += record.syndrome.str();
    out += '\t';
    out += std::to_string(record.key_bits);
    out += '\n';
  }
  return out;
}

Transcript parse_transcript(std::string_view text) {
  Transcript transcript;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string index, cls, syndrome, key_bits;
    if (!std::getline(fields, index, '\t') ||
        !std::getline(fields, cls, '\t') ||
        !std::getline(fields, syndrome, '\t') ||
        !std::getline(fields, key_bits)) {
      throw std::invalid_argument("bad transcript line: " + line);
    }
    BlockRecord record;
    record.index = std::stoull(index);
    record.cls = EncodingClass::parse(cls);
    std::uint8_t value = 0;
    if (syndrome.size() != 4) {
      throw std::invalid_argument("bad syndrome: " + syndrome);
    }
    for (char c : syndrome) value = static_cast<std::uint8_t>((value << 1) | (c == '1'));
    record.syndrome = SyndromeLabel{value};
    record.key_bits = std::stoull(key_bits);
    transcript.key_bits += record.key_bits;
    if (!record.cls.trivial()) transcript.payload_bits += 4;
    transcript.records.push_back(record);
  }
  transcript.blocks = transcript.records.size();
  return transcript;
}

StateVector alice_encode_exact(const ProtocolContext& ctx,
                               const StateVector& payload, EncodingClass cls,
                               const TwirlLayer& twirl) {
  if (cls.trivial()) return ctx.clean_codeword();
  if (payload.num_qubits() != 4) {
    throw std::invalid_argument("payload must be a 4-qubit state");
  }
  const EncodingTable& table = ctx.tables.for_class_id(cls.id());

  StateVector state = StateVector::tensor(
      payload, StateVector::tensor(StateVector::basis(4, 0),
                                   ctx.cover_state()));
  twirl.apply(state);
  apply_syndrome_swap(state, table, SwapDirection::kForward);
  if (!state.register_is_zero(0, 4, 1e-10)) {
    throw std::runtime_error("stego register was not swapped to |0000>");
  }
  // Stego register is |0000>: keep the ancilla+cover block and encode it.
  StateVector codeword(5);
  for (std::size_t m = 0; m < 32; ++m) {
    codeword.amplitudes()[m] = state.amplitude(m);
  }
  codeword.apply_gates(ctx.encoder.circuit, 0);
  return codeword;
}

StateVector bob_decode_exact(const ProtocolContext& ctx,
                             const StateVector& codeword, EncodingClass cls,
                             const TwirlLayer& twirl) {
  if (codeword.num_qubits() != 5) {
    throw std::invalid_argument("codeword must be a 5-qubit state");
  }
  const EncodingTable& table =
      ctx.tables.for_class_id(cls.trivial() ? 1 : cls.id());

  StateVector received = codeword;
  received.apply_gates(ctx.encoder.circuit, 0, /*inverse=*/true);

  StateVector state(9);
  state.amplitudes().assign(512, {0.0, 0.0});
  for (std::size_t m = 0; m < 32; ++m) {
    state.amplitudes()[m] = received.amplitude(m);
  }
  apply_syndrome_swap(state, table, SwapDirection::kInverse);
  if (!cls.trivial()) twirl.apply(state);
  return state;
}

StegoStream::StegoStream(const ProtocolContext& ctx, std::uint64_t seed)
    : ctx_(ctx),
      fractions_(encoding_fractions(ctx.config.p)),
      alice_selector_(fractions_),
      bob_selector_(fractions_),
      alice_select_(seed, 1),
      bob_select_(seed, 1),
      alice_twirl_(seed, 2),
      bob_twirl_(seed, 2),
      payload_rng_(seed ^ 0x9e3779b97f4a7c15ull),
      seed_(seed),
      clean_codeword_(ctx.clean_codeword()) {}

StegoStream::BlockOutcome StegoStream::next_block() {
  const std::uint64_t select_before = alice_select_.bits_consumed();

  EncodingClass cls = alice_selector_.next(alice_select_);
  const EncodingClass bob_cls = bob_selector_.next(bob_select_);
  if (!(cls == bob_cls)) {
    throw std::runtime_error("parties disagree on the encoding class");
  }
  if (forced_) cls = *forced_;

  const std::uint64_t select_charge =
      ctx_.config.key_mode == KeyAccounting::kBlockwise
          ? 3
          : alice_select_.bits_consumed() - select_before;
  std::uint64_t charged = select_charge;

  BlockOutcome out;
  out.select_bits = select_charge;
  out.emitted = PauliOperator(5);
  out.record.index = index_;
  out.record.syndrome = SyndromeLabel{0};

  if (!cls.trivial()) {
    const auto payload =
        static_cast<std::uint8_t>(payload_rng_() & 15);
    const TwirlLayer alice_layer = TwirlLayer::draw(alice_twirl_);
    const TwirlLayer bob_layer = TwirlLayer::draw(bob_twirl_);
    charged += 8;

    const EncodingTable& table = ctx_.tables.for_class_id(cls.id());
    const std::uint8_t twirled = payload ^ alice_layer.x_nibble();
    const EncodingRow& row = table.row_for_nibble(twirled);
    out.emitted = row.encoded_error;
    out.record.syndrome = row.syndrome;
    out.payload_nibble = payload;

    if (ctx_.config.mode == ProtocolMode::kExact) {
      const StateVector payload_state = StateVector::basis(4, payload);
      const StateVector codeword =
          alice_encode_exact(ctx_, payload_state, cls, alice_layer);
      // The transmitted state is the clean codeword hit by the frame error.
      StateVector frame_view = clean_codeword_;
      frame_view.apply_pauli(out.emitted, 0);
      if (codeword.fidelity(frame_view) < 1.0 - 1e-10) {
        throw std::runtime_error("exact and frame paths disagree");
      }
      const StateVector decoded =
          bob_decode_exact(ctx_, codeword, cls, bob_layer);
      const StateVector expected = StateVector::tensor(
          payload_state, StateVector::tensor(StateVector::basis(4, 0),
                                             ctx_.cover_state()));
      out.fidelity = decoded.fidelity(expected);
    }

    // Frame decode: the raw syndrome of the received error is the twirled
    // nibble; untwirling recovers the payload.
    const std::uint8_t raw = ctx_.code.syndrome_raw(out.emitted);
    const EncodingRow& bob_row = table.row_for_nibble(raw);
    if (!bob_row.encoded_error.equal_up_to_phase(out.emitted)) {
      throw std::runtime_error(
          "received error is not in the agreed table (corrupted block)");
    }
    const std::uint8_t decoded_nibble =
        static_cast<std::uint8_t>(raw ^ bob_layer.x_nibble());
    if (decoded_nibble != payload) {
      throw std::runtime_error("frame decode did not return the payload");
    }
  }

  if (alice_select_.bits_consumed() != bob_select_.bits_consumed() ||
      alice_twirl_.bits_consumed() != bob_twirl_.bits_consumed()) {
    throw std::runtime_error("key consumption diverged between parties");
  }

  out.record.cls = cls;
  out.record.key_bits = charged;
  ++index_;
  return out;
}

Transcript StegoStream::run(std::uint64_t blocks, bool keep_records,
                            const Observer& observer) {
  Transcript transcript;
  transcript.p = ctx_.config.p;
  transcript.seed = seed_;
  transcript.mode = ctx_.config.mode;
  transcript.key_mode = ctx_.config.key_mode;
  transcript.blocks = blocks;
  if (keep_records) transcript.records.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const BlockOutcome outcome = next_block();
    transcript.key_bits += outcome.record.key_bits;
    transcript.select_bits += outcome.select_bits;
    if (!outcome.record.cls.trivial()) transcript.payload_bits += 4;
    if (keep_records) transcript.records.push_back(outcome.record);
    if (observer) observer(outcome);
  }
  return transcript;
}

}  // namespace stego
