#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stego/clifford.hpp"
#include "stego/encoding_table.hpp"
#include "stego/keystream.hpp"
#include "stego/pauli.hpp"
#include "stego/perfect_code.hpp"
#include "stego/rates.hpp"
#include "stego/statevector.hpp"

namespace stego {

enum class ProtocolMode { kFrame, kExact };
enum class KeyAccounting { kBlockwise, kStream };

// One of the eight encodings: trivial, single-error, or one of the six
// double-error tables.
struct EncodingClass {
  enum class Kind : std::uint8_t { kTrivial, kSingleError, kDoubleError };

  Kind kind = Kind::kTrivial;
  std::uint8_t double_index = 0;  // 0..5, meaningful for kDoubleError

  static EncodingClass from_id(std::size_t id);  // 0..7
  std::size_t id() const;
  bool trivial() const { return kind == Kind::kTrivial; }
  std::string str() const;
  static EncodingClass parse(const std::string& text);

  bool operator==(const EncodingClass&) const = default;
};

// Exact sampler for the encoding-class distribution, driven by shared key
// bits. A binary range decoder narrows the key stream interpreted as a
// uniform code value, so consecutive samples are independent with the exact
// class probabilities (quantized at 2^-40) and the amortized number of bits
// drawn per sample approaches the distribution's entropy.
class ClassSelector {
 public:
  explicit ClassSelector(const EncodingFractions& fractions);

  EncodingClass next(KeyStream& key);

  const std::array<double, 8>& probabilities() const { return probs_; }

 private:
  std::array<double, 8> probs_{};    // normalized over the eight classes
  std::array<double, 9> cumulative_{};
  std::uint64_t range_ = 1;
  std::uint64_t value_ = 0;
};

// Keyed per-qubit twirl of the four stego qubits. Bit pairs map
// 00->I, 01->X, 10->Z, 11->Y; drawing consumes exactly 8 key bits.
struct TwirlLayer {
  std::array<PauliOperator, 4> ops;

  static TwirlLayer draw(KeyStream& key);

  // Which stego bits the layer flips, qubit 0 as the most significant.
  std::uint8_t x_nibble() const;

  // Applies (or, being an involution, undoes) the layer on qubits 0..3.
  void apply(StateVector& state) const;
};

struct ProtocolConfig {
  double p = 0.05;
  double cover_theta = 0.0;  // cover qubit cos(t/2)|0> + e^{i phi} sin(t/2)|1>
  double cover_phi = 0.0;
  ProtocolMode mode = ProtocolMode::kFrame;
  KeyAccounting key_mode = KeyAccounting::kBlockwise;
};

// Everything both parties agree on before the stream starts.
struct ProtocolContext {
  StabilizerCode code;
  EncoderBundle encoder;
  TableSet tables;
  ProtocolConfig config;

  static ProtocolContext standard(const ProtocolConfig& config);
  static ProtocolContext with_tables(const ProtocolConfig& config,
                                     TableSet tables);

  StateVector cover_state() const;
  StateVector clean_codeword() const;  // encoded |0000>|cover>
};

struct BlockRecord {
  std::uint64_t index = 0;
  EncodingClass cls;
  SyndromeLabel syndrome;
  std::uint64_t key_bits = 0;  // charged under the active accounting mode
};

struct Transcript {
  double p = 0.0;
  std::uint64_t seed = 0;
  ProtocolMode mode = ProtocolMode::kFrame;
  KeyAccounting key_mode = KeyAccounting::kBlockwise;
  std::uint64_t blocks = 0;
  std::uint64_t payload_bits = 0;
  std::uint64_t key_bits = 0;     // selection plus twirl, as charged
  std::uint64_t select_bits = 0;  // selection component alone

  std::vector<BlockRecord> records;

  double payload_per_qubit() const {
    return blocks ? static_cast<double>(payload_bits) / (5.0 * blocks) : 0.0;
  }
  double key_bits_per_qubit() const {
    return blocks ? static_cast<double>(key_bits) / (5.0 * blocks) : 0.0;
  }
  double select_bits_per_qubit() const {
    return blocks ? static_cast<double>(select_bits) / (5.0 * blocks) : 0.0;
  }
};

// Line format: block_index<TAB>class<TAB>syndrome<TAB>key_bits.
std::string serialize_transcript(const Transcript& transcript);
Transcript parse_transcript(std::string_view text);

// Exact-path encode: twirl, swap the stego state into the syndrome space,
// verify the stego register is |0000>, then encode. Returns the transmitted
// 5-qubit codeword. The trivial class ignores the payload and returns the
// clean codeword.
StateVector alice_encode_exact(const ProtocolContext& ctx,
                               const StateVector& payload, EncodingClass cls,
                               const TwirlLayer& twirl);

// Exact-path decode: inverse encoder, inverse swap, untwirl. Returns the full
// 9-qubit register; the payload sits on qubits 0..3 with the ancilla back to
// |0000> and the cover restored.
StateVector bob_decode_exact(const ProtocolContext& ctx,
                             const StateVector& codeword, EncodingClass cls,
                             const TwirlLayer& twirl);

// Two-party stream driver with mirrored key streams. Every block is decoded
// by Bob and checked against Alice's payload; any asymmetry throws.
class StegoStream {
 public:
  struct BlockOutcome {
    BlockRecord record;
    PauliOperator emitted;        // error frame actually transmitted
    std::uint8_t payload_nibble = 0;
    double fidelity = 1.0;        // exact-mode round trip, 1.0 in frame mode
    std::uint64_t select_bits = 0;  // selection charge inside record.key_bits
  };

  using Observer = std::function<void(const BlockOutcome&)>;

  StegoStream(const ProtocolContext& ctx, std::uint64_t seed);

  BlockOutcome next_block();

  // Runs a fixed number of blocks. Records are stored in the transcript only
  // when keep_records is set; aggregates are always filled.
  Transcript run(std::uint64_t blocks, bool keep_records = true,
                 const Observer& observer = {});

  // Forces every nontrivial block into one class, for detectability
  // controls. Key accounting is unchanged.
  void force_class(std::optional<EncodingClass> forced) { forced_ = forced; }

 private:
  const ProtocolContext& ctx_;
  EncodingFractions fractions_;
  ClassSelector alice_selector_;
  ClassSelector bob_selector_;
  KeyStream alice_select_;
  KeyStream bob_select_;
  KeyStream alice_twirl_;
  KeyStream bob_twirl_;
  std::mt19937_64 payload_rng_;
  std::uint64_t seed_;
  std::uint64_t index_ = 0;
  std::optional<EncodingClass> forced_;
  StateVector clean_codeword_;
};

}  // namespace stego
