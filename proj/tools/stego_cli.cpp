// Command-line front end: table verification, protocol simulation, channel
// distinguishability analysis, and rate-curve emission.
//
// Exit codes: 0 success, 1 verification failure, 2 distinguishability
// failure, 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stego/channel.hpp"
#include "stego/clifford.hpp"
#include "stego/protocol.hpp"
#include "stego/rates.hpp"
#include "stego/util.hpp"
#include "stego/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDistinguishable = 2;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

stego::ProtocolContext make_context(double p, const std::string& mode,
                                    const std::string& key_mode,
                                    const std::string& tables_path) {
  stego::ProtocolConfig config;
  config.p = p;
  config.mode = mode == "exact" ? stego::ProtocolMode::kExact
                                : stego::ProtocolMode::kFrame;
  config.key_mode = key_mode == "stream" ? stego::KeyAccounting::kStream
                                         : stego::KeyAccounting::kBlockwise;
  if (tables_path.empty() || tables_path == "derived") {
    return stego::ProtocolContext::standard(config);
  }
  return stego::ProtocolContext::with_tables(
      config, stego::parse_table_set(read_file(tables_path)));
}

std::optional<stego::EncodingClass> parse_forced_class(
    const std::string& name) {
  if (name.empty()) return std::nullopt;
  return stego::EncodingClass::parse(name);
}

int cmd_verify(bool corrupt_g1, const std::string& dump_path) {
  stego::VerifyOptions options;
  options.corrupt_g1 = corrupt_g1;
  const auto summary = stego::run_full_verification(options);
  std::cout << summary.render();
  if (!summary.ok()) {
    std::cout << "verification: FAILED\n";
    return kExitVerifyFailure;
  }
  if (!dump_path.empty()) {
    stego::write_file_atomic(dump_path, stego::dump_derived_tables());
    std::cout << "derived tables written to " << dump_path << "\n";
  }
  std::cout << "verification: all checks passed\n";
  return kExitOk;
}

int cmd_simulate(double p, std::uint64_t blocks, std::uint64_t seed,
                 const std::string& mode, const std::string& key_mode,
                 const std::string& out, const std::string& tables,
                 const std::string& force_class) {
  const auto ctx = make_context(p, mode, key_mode, tables);
  stego::StegoStream stream(ctx, seed);
  if (const auto forced = parse_forced_class(force_class)) {
    stream.force_class(forced);
  }

  stego::SyndromeHistogram histogram;
  double min_fidelity = 1.0;
  const auto transcript =
      stream.run(blocks, /*keep_records=*/true,
                 [&](const stego::StegoStream::BlockOutcome& outcome) {
                   histogram.add(outcome.record.syndrome);
                   min_fidelity = std::min(min_fidelity, outcome.fidelity);
                 });
  stego::write_file_atomic(out, stego::serialize_transcript(transcript));

  std::cout << "blocks: " << transcript.blocks << "\n"
            << "payload bits: " << transcript.payload_bits << "\n"
            << "payload/qubit: "
            << stego::format_double(transcript.payload_per_qubit()) << "\n"
            << "key bits: " << transcript.key_bits << "\n"
            << "key bits/qubit: "
            << stego::format_double(transcript.key_bits_per_qubit()) << "\n";
  if (ctx.config.key_mode == stego::KeyAccounting::kStream) {
    std::cout << "selection bits/qubit: "
              << stego::format_double(transcript.select_bits_per_qubit())
              << "\n";
  }
  if (ctx.config.mode == stego::ProtocolMode::kExact) {
    std::cout << "min round-trip fidelity: "
              << stego::format_double(min_fidelity) << "\n";
  }
  std::cout << "syndrome histogram:\n";
  for (int s = 0; s < 16; ++s) {
    std::cout << "  " << stego::SyndromeLabel{std::uint8_t(s)}.str() << " "
              << histogram.counts[s] << "\n";
  }
  std::cout << "transcript written to " << out << "\n";
  return kExitOk;
}

int cmd_eve(double p, std::uint64_t blocks, std::uint64_t seed,
            const std::string& granularity, double threshold,
            const std::string& out, const std::string& tables,
            const std::string& force_class) {
  const auto ctx = make_context(p, "frame", "blockwise", tables);
  const auto gran = granularity == "operator"
                        ? stego::EveGranularity::kOperator
                        : stego::EveGranularity::kSyndrome;
  const auto report =
      stego::eve_report(ctx, blocks, seed, gran, parse_forced_class(force_class));
  stego::write_file_atomic(out, stego::eve_report_csv(report));

  std::cout << "cells: " << report.cell_names.size() << "\n"
            << "tv distance: " << stego::format_double(report.tv) << "\n"
            << "chi2 statistic: "
            << stego::format_double(report.chi2.statistic) << " (dof "
            << stego::format_double(report.chi2.dof) << ")\n"
            << "p-value: " << stego::format_double(report.chi2.p_value) << "\n"
            << "residual weight>=3 channel mass: "
            << stego::format_double(report.residual_weight3_mass) << "\n"
            << "report written to " << out << "\n";
  if (report.chi2.p_value <= threshold) {
    std::cout << "stream distinguishable from the channel at threshold "
              << stego::format_double(threshold) << "\n";
    return kExitDistinguishable;
  }
  return kExitOk;
}

int cmd_rates(double delta, const std::optional<double>& single_p,
              const std::string& out) {
  const auto grid =
      single_p ? std::vector<double>{*single_p} : stego::default_p_grid();
  stego::write_file_atomic(out, stego::rate_csv(grid, delta));
  std::cout << "rows: " << grid.size() << "\n"
            << "note: the H column is the per-block syndrome entropy of the "
               "truncated channel, not a binary-symmetric-channel entropy\n"
            << "rates written to " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syndrome steganography on the five-qubit perfect code"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check the reference tables, encoder, and derived encodings");
  bool corrupt_g1 = false;
  std::string dump_path;
  verify->add_flag("--corrupt-g1", corrupt_g1)->group("");  // test hook
  verify->add_option("--dump-tables", dump_path,
                     "Write the derived encoding tables to a file");

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "Run the protocol over many blocks");
  double p = 0.05;
  std::uint64_t blocks = 100000;
  std::uint64_t seed = 0;
  std::string mode = "frame";
  std::string key_mode = "blockwise";
  std::string out_path = "transcript.tsv";
  std::string tables_path;
  std::string force_class;
  simulate->add_option("--p", p, "Depolarizing parameter")->check(CLI::Range(0.0, 0.5));
  simulate->add_option("--blocks", blocks, "Number of five-qubit blocks");
  simulate->add_option("--seed", seed, "Deterministic seed");
  simulate->add_option("--mode", mode, "Simulation path")
      ->check(CLI::IsMember({"frame", "exact"}));
  simulate->add_option("--key-mode", key_mode, "Key accounting")
      ->check(CLI::IsMember({"blockwise", "stream"}));
  simulate->add_option("--out", out_path, "Transcript output path");
  simulate->add_option("--tables", tables_path,
                       "'derived' (default) or a table-set file");
  simulate->add_option("--force-class", force_class,
                       "Force every block into one encoding class")
      ->check(CLI::IsMember({"trivial", "single", "double1", "double2",
                             "double3", "double4", "double5", "double6"}));

  // eve
  auto* eve = app.add_subcommand(
      "eve", "Compare stego traffic against the depolarizing channel");
  double eve_p = 0.05;
  std::uint64_t eve_blocks = 1000000;
  std::uint64_t eve_seed = 0;
  std::string granularity = "operator";
  double threshold = 0.001;
  std::string eve_out = "eve_report.csv";
  std::string eve_tables;
  std::string eve_force;
  eve->add_option("--p", eve_p, "Depolarizing parameter")->check(CLI::Range(0.0, 0.5));
  eve->add_option("--blocks", eve_blocks, "Number of observed blocks");
  eve->add_option("--seed", eve_seed, "Deterministic seed");
  eve->add_option("--granularity", granularity, "Histogram granularity")
      ->check(CLI::IsMember({"syndrome", "operator"}));
  eve->add_option("--threshold", threshold,
                  "p-value below which the stream counts as detected");
  eve->add_option("--out", eve_out, "Report output path");
  eve->add_option("--tables", eve_tables,
                  "'derived' (default) or a table-set file");
  eve->add_option("--force-class", eve_force,
                  "Force every block into one encoding class")
      ->check(CLI::IsMember({"trivial", "single", "double1", "double2",
                             "double3", "double4", "double5", "double6"}));

  // rates
  auto* rates = app.add_subcommand("rates", "Emit the rate curves as CSV");
  double delta = 0.005;
  std::optional<double> rates_p;
  std::string rates_out = "rates.csv";
  rates->add_option("--delta", delta, "Spread parameter for r_enc")
      ->check(CLI::Range(1e-9, 0.999999));
  rates->add_option("--p", rates_p,
                    "Evaluate a single point instead of the default grid");
  rates->add_option("--out", rates_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(corrupt_g1, dump_path);
    if (simulate->parsed()) {
      return cmd_simulate(p, blocks, seed, mode, key_mode, out_path,
                          tables_path, force_class);
    }
    if (eve->parsed()) {
      return cmd_eve(eve_p, eve_blocks, eve_seed, granularity, threshold,
                     eve_out, eve_tables, eve_force);
    }
    if (rates->parsed()) return cmd_rates(delta, rates_p, rates_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
