#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stego/pauli.hpp"
#include "stego/perfect_code.hpp"
#include "stego/protocol.hpp"
#include "stego/stats.hpp"

namespace stego {

// One depolarizing-channel draw on a 5-qubit block: each qubit independently
// stays clean with probability 1-p, otherwise picks X, Y or Z uniformly.
// Valid for p in [0, 0.75].
PauliOperator depolarize_frame(double p, std::mt19937_64& rng);

// The channel truncated to weights 0..2 and renormalized: identity at p0/Z,
// each single error at p1/(15 Z), each double error at p2/(90 Z), with
// Z = p0+p1+p2. Cells are indexed 0 (identity), 1..15 (weight-1 errors in
// enumeration order), 16..105 (weight-2 errors in enumeration order).
class ErrorDistribution {
 public:
  static constexpr std::size_t kCells = 106;

  static ErrorDistribution truncated(double p);

  double probability(std::size_t cell) const { return probs_[cell]; }
  const std::vector<double>& probabilities() const { return probs_; }

  // Cell index of a sign-free operator of weight <= 2, or nullopt.
  static std::optional<std::size_t> cell_of(const PauliOperator& op);
  static const PauliOperator& operator_at(std::size_t cell);

 private:
  std::vector<double> probs_ = std::vector<double>(kCells, 0.0);
};

struct SyndromeHistogram {
  std::array<std::uint64_t, 16> counts{};
  std::uint64_t total = 0;

  void add(SyndromeLabel label) {
    counts[label.value]++;
    ++total;
  }
  std::vector<std::uint64_t> as_vector() const {
    return {counts.begin(), counts.end()};
  }
};

struct OperatorHistogram {
  std::array<std::uint64_t, ErrorDistribution::kCells> counts{};
  std::uint64_t total = 0;
  std::uint64_t out_of_support = 0;  // weight >= 3 draws, untruncated runs

  void add(const PauliOperator& op) {
    const auto cell = ErrorDistribution::cell_of(op);
    if (cell) {
      counts[*cell]++;
    } else {
      ++out_of_support;
    }
    ++total;
  }
  std::vector<std::uint64_t> as_vector() const {
    return {counts.begin(), counts.end()};
  }
};

// Histogram of printed syndromes over a transcript.
SyndromeHistogram syndrome_histogram(const Transcript& transcript);

// Expected printed-syndrome distribution of the truncated channel: p0/Z on
// 0000 and (p1+p2)/(15 Z) on each nonzero label.
std::vector<double> truncated_syndrome_distribution(double p);

enum class EveGranularity { kSyndrome, kOperator };

struct EveReport {
  double p = 0.0;
  std::uint64_t blocks = 0;
  std::uint64_t seed = 0;
  EveGranularity granularity = EveGranularity::kSyndrome;
  double tv = 0.0;
  ChiSquaredResult chi2;
  double residual_weight3_mass = 0.0;  // channel mass the scheme never emits
  std::vector<std::string> cell_names;
  std::vector<std::uint64_t> observed;
  std::vector<double> expected_probs;
};

// Runs a frame-mode stego stream and compares its statistics against the
// truncated channel at the same p.
EveReport eve_report(const ProtocolContext& ctx, std::uint64_t blocks,
                     std::uint64_t seed, EveGranularity granularity,
                     std::optional<EncodingClass> forced_class = {});

// CSV with a metadata comment line, a header row, and one row per cell:
// cell,observed,expected,residual.
std::string eve_report_csv(const EveReport& report);

// Exact mixture the protocol emits at parameter p: classes weighted by the
// normalized fractions, rows uniform within each class. Equals the truncated
// channel distribution identically; exposed so tests can check the identity
// without sampling.
std::vector<double> stego_operator_distribution(const ProtocolContext& ctx);

}  // namespace stego
