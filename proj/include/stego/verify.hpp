#pragma once

#include <string>
#include <vector>

#include "stego/encoding_table.hpp"

namespace stego {

struct VerifyLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifySummary {
  std::vector<VerifyLine> lines;
  std::vector<std::string> notes;     // informational
  std::vector<std::string> failures;  // detailed mismatches

  bool ok() const;
  std::string render() const;  // one "name: detail [ok|FAIL]" line each
};

struct VerifyOptions {
  bool corrupt_g1 = false;  // negative-control hook: flips one bit of g1
};

// Runs every table and encoder verification: the syndrome table, the
// single-error encoding table, the two-qubit error groups, encoder synthesis
// and circuit re-extraction, the derived tables with their ancilla X-part
// structure, and the double-error partition.
VerifySummary run_full_verification(const VerifyOptions& options = {});

// The derived tables in force, serialized (for --dump-tables).
std::string dump_derived_tables();

}  // namespace stego
