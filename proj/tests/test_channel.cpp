#include "stego/channel.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace stego;

namespace {

const ProtocolContext& eve_context() {
  static const ProtocolContext ctx = ProtocolContext::standard(
      {0.05, 0.0, 0.0, ProtocolMode::kFrame, KeyAccounting::kBlockwise});
  return ctx;
}

}  // namespace

TEST_CASE("depolarize_frame edge cases and weight statistics") {
  std::mt19937_64 rng(211);
  for (int i = 0; i < 100; ++i) {
    CHECK(depolarize_frame(0.0, rng).is_identity_bits());
  }
  CHECK_THROWS_AS(depolarize_frame(0.8, rng), std::domain_error);

  const int samples = 1000000;
  std::array<int, 6> weight_counts{};
  for (int i = 0; i < samples; ++i) {
    weight_counts[depolarize_frame(0.1, rng).weight()]++;
  }
  const auto b = block_probs(0.1);
  const double n = samples;
  CHECK(std::abs(weight_counts[0] / n - b.p0) <
        3.0 * std::sqrt(b.p0 * (1 - b.p0) / n));
  CHECK(std::abs(weight_counts[2] / n - b.p2) <
        3.0 * std::sqrt(b.p2 * (1 - b.p2) / n));
}

TEST_CASE("truncated distribution closed form and monte carlo oracle") {
  const auto dist = ErrorDistribution::truncated(0.1);

  double total = 0.0;
  for (std::size_t c = 0; c < ErrorDistribution::kCells; ++c) {
    total += dist.probability(c);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  // Hand value: each single-error cell carries p1 / (15 Z).
  CHECK(dist.probability(1) ==
        doctest::Approx(0.32805 / (15.0 * 0.99144)).epsilon(1e-9));

  // Independent oracle: depolarizing samples with weight >= 3 rejected.
  std::mt19937_64 rng(223);
  OperatorHistogram histogram;
  const int wanted = 400000;
  while (static_cast<int>(histogram.total - histogram.out_of_support) <
         wanted) {
    histogram.add(depolarize_frame(0.1, rng));
  }
  const double kept =
      static_cast<double>(histogram.total - histogram.out_of_support);
  for (std::size_t c : {std::size_t{0}, std::size_t{1}, std::size_t{20},
                        std::size_t{105}}) {
    const double expected = dist.probability(c);
    const double sigma = std::sqrt(expected * (1 - expected) / kept);
    CHECK(std::abs(histogram.counts[c] / kept - expected) < 3.5 * sigma);
  }

  // Point mass on identity at p = 0.
  const auto zero = ErrorDistribution::truncated(0.0);
  CHECK(zero.probability(0) == 1.0);
  CHECK(zero.probability(50) == 0.0);
}

TEST_CASE("operator cells cover exactly the weight <= 2 support") {
  CHECK(ErrorDistribution::cell_of(PauliOperator(5)) == 0);
  CHECK(ErrorDistribution::cell_of(PauliOperator::parse("XXXII")) ==
        std::nullopt);
  std::size_t found = 0;
  for (std::size_t c = 0; c < ErrorDistribution::kCells; ++c) {
    const auto& op = ErrorDistribution::operator_at(c);
    CHECK(ErrorDistribution::cell_of(op) == c);
    ++found;
  }
  CHECK(found == 106);
}

TEST_CASE("stego mixture equals the truncated channel exactly") {
  for (double p : {0.01, 0.05, 0.1, 0.3}) {
    const ProtocolContext ctx = ProtocolContext::standard(
        {p, 0.0, 0.0, ProtocolMode::kFrame, KeyAccounting::kBlockwise});
    const auto mixture = stego_operator_distribution(ctx);
    const auto channel = ErrorDistribution::truncated(p);
    for (std::size_t c = 0; c < ErrorDistribution::kCells; ++c) {
      CHECK(std::abs(mixture[c] - channel.probability(c)) < 1e-12);
    }
  }
}

TEST_CASE("tv distance basics") {
  std::vector<double> d = {0.25, 0.75};
  CHECK(tv_distance(d, d) == 0.0);
  const std::vector<double> peak_a = {1.0, 0.0};
  const std::vector<double> peak_b = {0.0, 1.0};
  CHECK(tv_distance(peak_a, peak_b) == 1.0);
  CHECK_THROWS_AS(tv_distance(std::vector<std::uint64_t>{0, 0},
                              std::vector<double>{0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("chi squared tail against exact even-dof forms") {
  // dof 2: P(X > x) = exp(-x/2); dof 4: (1 + x/2) exp(-x/2).
  for (double x : {0.5, 2.0, 7.5, 31.0}) {
    CHECK(chi_squared_tail(x, 2.0) ==
          doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-10));
    CHECK(chi_squared_tail(x, 4.0) ==
          doctest::Approx((1.0 + x / 2.0) * std::exp(-x / 2.0)).epsilon(1e-10));
  }
  // A classic quantile: P(X > 3.841) for dof 1 is about 0.05.
  CHECK(chi_squared_tail(3.8414588, 1.0) == doctest::Approx(0.05).epsilon(1e-4));
}

TEST_CASE("chi squared test basics") {
  // Exact match: statistic 0, p-value 1.
  std::vector<std::uint64_t> counts = {500, 300, 200};
  std::vector<double> probs = {0.5, 0.3, 0.2};
  const auto exact = chi_squared_test(counts, probs);
  CHECK(exact.statistic == 0.0);
  CHECK(exact.p_value == 1.0);
  CHECK(exact.dof == 2.0);

  CHECK_THROWS_AS(chi_squared_test({1000}, {1.0}), std::invalid_argument);

  // Low-expectation cells are pooled.
  std::vector<std::uint64_t> sparse = {996, 1, 2, 1};
  std::vector<double> sparse_probs = {0.997, 0.001, 0.001, 0.001};
  const auto pooled = chi_squared_test(sparse, sparse_probs);
  CHECK(pooled.cells == 2);
}

TEST_CASE("syndrome histogram of a stego stream matches the channel") {
  const ProtocolContext ctx = ProtocolContext::standard(
      {0.1, 0.0, 0.0, ProtocolMode::kFrame, KeyAccounting::kBlockwise});
  StegoStream stream(ctx, 17);
  const auto transcript = stream.run(1000000, /*keep_records=*/true);
  const auto histogram = syndrome_histogram(transcript);
  const auto expected = truncated_syndrome_distribution(0.1);

  const double n = static_cast<double>(histogram.total);
  for (int s = 0; s < 16; ++s) {
    const double sigma = std::sqrt(expected[s] * (1 - expected[s]) / n);
    CHECK(std::abs(histogram.counts[s] / n - expected[s]) <
          3.5 * sigma);
  }

  // All-trivial stream concentrates on syndrome 0000.
  const ProtocolContext quiet = ProtocolContext::standard(
      {0.0, 0.0, 0.0, ProtocolMode::kFrame, KeyAccounting::kBlockwise});
  StegoStream quiet_stream(quiet, 17);
  const auto quiet_hist = syndrome_histogram(quiet_stream.run(1000));
  CHECK(quiet_hist.counts[0] == 1000);
}

TEST_CASE("eve report on an honest stream passes") {
  const auto report =
      eve_report(eve_context(), 200000, 29, EveGranularity::kOperator);
  CHECK(report.tv < 0.01);
  CHECK(report.chi2.p_value > 0.001);
  CHECK(report.cell_names.size() == 106);
  CHECK(report.residual_weight3_mass ==
        doctest::Approx(0.001158125).epsilon(1e-9));

  const auto syn = eve_report(eve_context(), 200000, 29,
                              EveGranularity::kSyndrome);
  CHECK(syn.cell_names.size() == 16);
  CHECK(syn.chi2.p_value > 0.001);

  const auto csv = eve_report_csv(report);
  CHECK(csv.find("# p=0.05 blocks=200000 seed=29 granularity=operator") !=
        std::string::npos);
  CHECK(csv.find("cell,observed,expected,residual\n") != std::string::npos);
}

TEST_CASE("quiet channel control reports zero distance") {
  const ProtocolContext quiet = ProtocolContext::standard(
      {0.0, 0.0, 0.0, ProtocolMode::kFrame, KeyAccounting::kBlockwise});
  const auto report =
      eve_report(quiet, 10000, 3, EveGranularity::kOperator);
  CHECK(report.tv == 0.0);
  CHECK(report.chi2.p_value == 1.0);
  CHECK(report.residual_weight3_mass == 0.0);
}

TEST_CASE("forced single-error streams are detectable") {
  const auto report = eve_report(
      eve_context(), 100000, 31, EveGranularity::kSyndrome,
      EncodingClass{EncodingClass::Kind::kSingleError, 0});
  CHECK(report.chi2.p_value < 1e-6);
}

TEST_CASE("calibration: p-values exceed 0.001 on almost all seeds") {
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto report =
        eve_report(eve_context(), 100000, seed, EveGranularity::kOperator);
    if (report.chi2.p_value > 0.001) ++passes;
  }
  CHECK(passes >= 19);
}
