#pragma once

#include <string>
#include <vector>

namespace stego {

// Closed-form block statistics and transmission/key rates for the protocol.
// The validity domain is p in [0, 0.5]; the q0 fraction hits zero exactly at
// p = 0.5. The typical-sequence rates additionally need 1 - 5p > 0.

struct BlockProbs {
  double p0, p1, p2;  // no error, one error, two errors on a block
  double sum() const { return p0 + p1 + p2; }
};

// p0 = (1-p)^5, p1 = 5p(1-p)^4, p2 = 10p^2(1-p)^3.
BlockProbs block_probs(double p);

struct EncodingFractions {
  double q0, q1, q2;  // trivial, single-error, all six double-error encodings
  double sum() const { return q0 + q1 + q2; }
};

// q0 = p0 - (p1+p2)/15, q1 = (16/15) p1, q2 = (16/15) p2. Throws a
// domain_error outside [0, 0.5], where q0 would go negative.
EncodingFractions encoding_fractions(double p);

// Average stego qubits per block, 4(q1+q2) = (64/15)(p1+p2). The two printed
// forms agree to 1e-14 and both are evaluated as a cross-check.
double n_avg(double p);

// Per-qubit key cost of block-at-a-time selection, (3 + 8(q1+q2))/5.
double key_rate_blockwise(double p);

struct AsymptoticKeyRate {
  // (1/5)(-q0 lg q0 - q1 lg q1 - q2 lg(q2/6)) on the unnormalized fractions.
  double verbatim;
  // Same expression on fractions normalized by q0+q1+q2; reported alongside
  // because the unnormalized fractions do not sum to one.
  double normalized;
};

AsymptoticKeyRate key_rate_asymptotic(double p);

struct EntropyRate {
  // Small-p approximation -(1-5p)lg(1-5p) - 5p lg 5p + 5p lg 15.
  double approx;
  // Per-block form -p0 lg p0 - ptilde lg(ptilde/15) with ptilde = 1-(1-p)^5.
  double exact;
};

// Needs 0 < p < 0.2.
EntropyRate shannon_entropy_rate(double p);

// Typical-sequence rate per qubit, -(1/5)lg(1-5p) + p lg(3(1-5p)/p);
// algebraically equal to shannon_entropy_rate(p).approx / 5.
double r_typ(double p);

// Constrained-weight encoding rate per qubit at spread delta in (0,1).
double r_enc(double p, double delta);

// CSV with header p,n_avg,n_avg_per_qubit,H,r_typ,r_enc,K,K_blockwise and
// 12-significant-digit values.
std::string rate_csv(const std::vector<double>& grid, double delta);

// The 100-point grid 0.001..0.1 in steps of 0.001.
std::vector<double> default_p_grid();

}  // namespace stego
