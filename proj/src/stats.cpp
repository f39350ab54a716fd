#include "stego/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stego {

namespace {

// Series expansion of P(a, x), accurate for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), accurate for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::invalid_argument("gamma_q needs a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_squared_tail(double x, double dof) {
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(dof / 2.0, x / 2.0);
}

ChiSquaredResult chi_squared_test(const std::vector<std::uint64_t>& observed,
                                  const std::vector<double>& expected_probs,
                                  double min_expected) {
  if (observed.size() != expected_probs.size()) {
    throw std::invalid_argument("observed/expected size mismatch");
  }
  std::uint64_t total = 0;
  for (auto c : observed) total += c;
  if (total == 0) throw std::invalid_argument("empty histogram");

  // Pool cells whose expected count falls below the threshold.
  std::vector<double> expected;
  std::vector<double> counts;
  double pool_expected = 0.0, pool_count = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_probs[i] * static_cast<double>(total);
    if (e < min_expected) {
      pool_expected += e;
      pool_count += static_cast<double>(observed[i]);
    } else {
      expected.push_back(e);
      counts.push_back(static_cast<double>(observed[i]));
    }
  }
  if (pool_expected > 0.0 || pool_count > 0.0) {
    if (pool_expected >= min_expected || expected.size() < 2) {
      expected.push_back(pool_expected);
      counts.push_back(pool_count);
    } else {
      // Still under the threshold: merge the pool into the smallest cell.
      std::size_t smallest = 0;
      for (std::size_t i = 1; i < expected.size(); ++i) {
        if (expected[i] < expected[smallest]) smallest = i;
      }
      expected[smallest] += pool_expected;
      counts[smallest] += pool_count;
    }
  }
  if (expected.size() < 2) {
    throw std::invalid_argument("degenerate expected distribution");
  }

  double statistic = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] <= 0.0) {
      if (counts[i] > 0.0) statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double diff = counts[i] - expected[i];
    statistic += diff * diff / expected[i];
  }

  ChiSquaredResult result;
  result.statistic = statistic;
  result.cells = expected.size();
  result.dof = static_cast<double>(expected.size() - 1);
  result.p_value = std::isinf(statistic)
                       ? 0.0
                       : chi_squared_tail(statistic, result.dof);
  return result;
}

double tv_distance(const std::vector<std::uint64_t>& observed,
                   const std::vector<double>& expected_probs) {
  if (observed.size() != expected_probs.size()) {
    throw std::invalid_argument("observed/expected size mismatch");
  }
  std::uint64_t total = 0;
  for (auto c : observed) total += c;
  if (total == 0) throw std::invalid_argument("empty histogram");
  double sum = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    sum += std::fabs(static_cast<double>(observed[i]) / total -
                     expected_probs[i]);
  }
  return 0.5 * sum;
}

double tv_distance(const std::vector<double>& a,
                   const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distribution size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return 0.5 * sum;
}

}  // namespace stego
