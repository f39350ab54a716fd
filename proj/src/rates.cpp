#include "stego/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "stego/util.hpp"

namespace stego {

namespace {

constexpr double kLog2E = 1.4426950408889634074;

double lg(double x) { return std::log(x) * kLog2E; }

void check_domain(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::domain_error(
        "p must lie in [0, 0.5]; beyond 0.5 the trivial-encoding fraction "
        "q0 = p0 - (p1+p2)/15 turns negative");
  }
}

void check_typical_domain(double p) {
  if (!(p > 0.0 && p < 0.2)) {
    throw std::domain_error("typical-sequence rates need 0 < p < 0.2");
  }
}

}  // namespace

BlockProbs block_probs(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("p must lie in [0, 1]");
  }
  const double q = 1.0 - p;
  return BlockProbs{q * q * q * q * q, 5.0 * p * q * q * q * q,
                    10.0 * p * p * q * q * q};
}

EncodingFractions encoding_fractions(double p) {
  check_domain(p);
  const BlockProbs b = block_probs(p);
  return EncodingFractions{b.p0 - (b.p1 + b.p2) / 15.0, (16.0 / 15.0) * b.p1,
                           (16.0 / 15.0) * b.p2};
}

double n_avg(double p) {
  const EncodingFractions q = encoding_fractions(p);
  const BlockProbs b = block_probs(p);
  const double from_fractions = 4.0 * (q.q1 + q.q2);
  const double from_probs = (64.0 / 15.0) * (b.p1 + b.p2);
  if (std::abs(from_fractions - from_probs) > 1e-14) {
    throw std::logic_error("n_avg forms disagree");
  }
  return from_fractions;
}

double key_rate_blockwise(double p) {
  const EncodingFractions q = encoding_fractions(p);
  return (3.0 + 8.0 * (q.q1 + q.q2)) / 5.0;
}

AsymptoticKeyRate key_rate_asymptotic(double p) {
  check_domain(p);
  if (p == 0.0) return {0.0, 0.0};
  const EncodingFractions q = encoding_fractions(p);
  const auto term = [](double weight, double arg) {
    return (weight > 0.0 && arg > 0.0) ? -weight * lg(arg) : 0.0;
  };
  const double verbatim =
      (term(q.q0, q.q0) + term(q.q1, q.q1) + term(q.q2, q.q2 / 6.0)) / 5.0;
  const double z = q.sum();
  const double normalized = (term(q.q0 / z, q.q0 / z) +
                             term(q.q1 / z, q.q1 / z) +
                             term(q.q2 / z, q.q2 / (6.0 * z))) /
                            5.0;
  return {verbatim, normalized};
}

EntropyRate shannon_entropy_rate(double p) {
  check_typical_domain(p);
  const double approx =
      -(1.0 - 5.0 * p) * lg(1.0 - 5.0 * p) - 5.0 * p * lg(5.0 * p) +
      5.0 * p * lg(15.0);
  const double p0 = block_probs(p).p0;
  const double ptilde = 1.0 - p0;
  const double exact = -p0 * lg(p0) - ptilde * lg(ptilde / 15.0);
  return {approx, exact};
}

double r_typ(double p) {
  check_typical_domain(p);
  return -0.2 * lg(1.0 - 5.0 * p) + p * lg(3.0 * (1.0 - 5.0 * p) / p);
}

double r_enc(double p, double delta) {
  check_typical_domain(p);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("delta must lie in (0, 1)");
  }
  const double low = 1.0 - 5.0 * p;
  const double high = 5.0 * p;
  return -0.2 * lg(low) +
         p * lg(low * std::pow(high, delta) / (high * std::pow(low, delta)));
}

std::string rate_csv(const std::vector<double>& grid, double delta) {
  std::string out = "p,n_avg,n_avg_per_qubit,H,r_typ,r_enc,K,K_blockwise\n";
  for (double p : grid) {
    const double nav = n_avg(p);
    out += format_double(p);
    out += ',';
    out += format_double(nav);
    out += ',';
    out += format_double(nav / 5.0);
    out += ',';
    out += format_double(shannon_entropy_rate(p).approx);
    out += ',';
    out += format_double(r_typ(p));
    out += ',';
    out += format_double(r_enc(p, delta));
    out += ',';
    out += format_double(key_rate_asymptotic(p).verbatim);
    out += ',';
    out += format_double(key_rate_blockwise(p));
    out += '\n';
  }
  return out;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(i * 0.001);
  return grid;
}

}  // namespace stego
