#include "stego/channel.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "stego/rates.hpp"
#include "stego/util.hpp"

namespace stego {

namespace {

struct CellIndex {
  std::vector<PauliOperator> operators;          // cell -> operator
  std::map<std::uint64_t, std::size_t> by_bits;  // bits key -> cell

  CellIndex() {
    operators.push_back(PauliOperator(5));
    for (const auto& e : enumerate_pauli_errors(5, 1)) operators.push_back(e);
    for (const auto& e : enumerate_pauli_errors(5, 2)) operators.push_back(e);
    for (std::size_t i = 0; i < operators.size(); ++i) {
      by_bits[operators[i].bits_key()] = i;
    }
  }
};

const CellIndex& cell_index() {
  static const CellIndex index;
  return index;
}

}  // namespace

PauliOperator depolarize_frame(double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 0.75)) {
    throw std::domain_error("depolarizing parameter must lie in [0, 0.75]");
  }
  PauliOperator frame(5);
  for (std::size_t q = 0; q < 5; ++q) {
    const double u = uniform_double(rng);
    if (u < p) {
      const char kind = "XYZ"[static_cast<std::size_t>(u / (p / 3.0)) % 3];
      frame = frame * PauliOperator::single(5, q, kind);
    }
  }
  return frame;
}

ErrorDistribution ErrorDistribution::truncated(double p) {
  encoding_fractions(p);  // shares the protocol's validity domain
  const BlockProbs b = block_probs(p);
  const double z = b.sum();
  ErrorDistribution dist;
  dist.probs_[0] = b.p0 / z;
  for (std::size_t cell = 1; cell <= 15; ++cell) {
    dist.probs_[cell] = b.p1 / (15.0 * z);
  }
  for (std::size_t cell = 16; cell < kCells; ++cell) {
    dist.probs_[cell] = b.p2 / (90.0 * z);
  }
  return dist;
}

std::optional<std::size_t> ErrorDistribution::cell_of(
    const PauliOperator& op) {
  const auto& index = cell_index().by_bits;
  const auto it = index.find(op.bits_key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const PauliOperator& ErrorDistribution::operator_at(std::size_t cell) {
  return cell_index().operators.at(cell);
}

SyndromeHistogram syndrome_histogram(const Transcript& transcript) {
  SyndromeHistogram histogram;
  for (const auto& record : transcript.records) {
    histogram.add(record.syndrome);
  }
  return histogram;
}

std::vector<double> truncated_syndrome_distribution(double p) {
  const BlockProbs b = block_probs(p);
  const double z = b.sum();
  std::vector<double> dist(16, (b.p1 + b.p2) / (15.0 * z));
  dist[0] = b.p0 / z;
  return dist;
}

EveReport eve_report(const ProtocolContext& ctx, std::uint64_t blocks,
                     std::uint64_t seed, EveGranularity granularity,
                     std::optional<EncodingClass> forced_class) {
  if (blocks == 0) throw std::invalid_argument("empty stego stream");
  const double p = ctx.config.p;

  EveReport report;
  report.p = p;
  report.blocks = blocks;
  report.seed = seed;
  report.granularity = granularity;
  const BlockProbs b = block_probs(p);
  report.residual_weight3_mass = 1.0 - b.sum();

  StegoStream stream(ctx, seed);
  if (forced_class) stream.force_class(forced_class);

  if (granularity == EveGranularity::kOperator) {
    OperatorHistogram histogram;
    stream.run(blocks, /*keep_records=*/false,
               [&](const StegoStream::BlockOutcome& outcome) {
                 histogram.add(outcome.emitted);
               });
    const auto dist = ErrorDistribution::truncated(p);
    report.observed = histogram.as_vector();
    report.expected_probs = dist.probabilities();
    for (std::size_t cell = 0; cell < ErrorDistribution::kCells; ++cell) {
      report.cell_names.push_back(ErrorDistribution::operator_at(cell).str());
    }
  } else {
    SyndromeHistogram histogram;
    stream.run(blocks, /*keep_records=*/false,
               [&](const StegoStream::BlockOutcome& outcome) {
                 histogram.add(outcome.record.syndrome);
               });
    report.observed = histogram.as_vector();
    report.expected_probs = truncated_syndrome_distribution(p);
    for (int s = 0; s < 16; ++s) {
      report.cell_names.push_back(SyndromeLabel{std::uint8_t(s)}.str());
    }
  }

  report.tv = tv_distance(report.observed, report.expected_probs);
  std::size_t support = 0;
  for (double q : report.expected_probs) support += (q > 0.0);
  if (support >= 2) {
    report.chi2 = chi_squared_test(report.observed, report.expected_probs);
  } else {
    // Point-mass expectation (p = 0): nothing to test, any off-support
    // observation is an immediate reject.
    report.chi2.cells = 1;
    report.chi2.dof = 0.0;
    bool clean = true;
    for (std::size_t i = 0; i < report.observed.size(); ++i) {
      if (report.expected_probs[i] == 0.0 && report.observed[i] > 0) {
        clean = false;
      }
    }
    report.chi2.statistic = clean ? 0.0 : std::numeric_limits<double>::infinity();
    report.chi2.p_value = clean ? 1.0 : 0.0;
  }
  return report;
}

std::string eve_report_csv(const EveReport& report) {
  std::string out = "# p=" + format_double(report.p) +
                    " blocks=" + std::to_string(report.blocks) +
                    " seed=" + std::to_string(report.seed) + " granularity=" +
                    (report.granularity == EveGranularity::kOperator
                         ? "operator"
                         : "syndrome") +
                    " tv=" + format_double(report.tv) +
                    " chi2=" + format_double(report.chi2.statistic) +
                    " p_value=" + format_double(report.chi2.p_value) +
                    " residual_w3=" +
                    format_double(report.residual_weight3_mass) + "\n";
  out += "cell,observed,expected,residual\n";
  const double total = static_cast<double>(report.blocks);
  for (std::size_t i = 0; i < report.cell_names.size(); ++i) {
    const double expected = report.expected_probs[i] * total;
    const double residual = static_cast<double>(report.observed[i]) - expected;
    out += report.cell_names[i];
    out += ',';
    out += std::to_string(report.observed[i]);
    out += ',';
    out += format_double(expected);
    out += ',';
    out += format_double(residual);
    out += '\n';
  }
  return out;
}

std::vector<double> stego_operator_distribution(const ProtocolContext& ctx) {
  const EncodingFractions q = encoding_fractions(ctx.config.p);
  const double z = q.sum();
  std::vector<double> dist(ErrorDistribution::kCells, 0.0);
  // Trivial class puts all its mass on the identity cell.
  dist[0] += q.q0 / z;
  // Each nontrivial class spreads uniformly over its sixteen rows.
  const auto add_table = [&](const EncodingTable& table, double weight) {
    for (const auto& row : table.rows()) {
      const auto cell = ErrorDistribution::cell_of(row.encoded_error);
      if (!cell) throw std::logic_error("table row outside weight <= 2");
      dist[*cell] += weight / 16.0;
    }
  };
  add_table(ctx.tables.single, q.q1 / z);
  for (const auto& table : ctx.tables.doubles) {
    add_table(table, q.q2 / (6.0 * z));
  }
  return dist;
}

}  // namespace stego
