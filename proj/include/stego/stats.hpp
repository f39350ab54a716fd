#pragma once

#include <cstdint>
#include <vector>

namespace stego {

// Regularized upper incomplete gamma Q(a, x), by series or continued
// fraction depending on the regime.
double regularized_gamma_q(double a, double x);

// Chi-squared tail probability P(X > x) with the given degrees of freedom.
double chi_squared_tail(double x, double dof);

struct ChiSquaredResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t cells = 0;  // after merging
  double dof = 0.0;
};

// Pearson goodness-of-fit of observed counts against expected probabilities.
// Cells with expected count below min_expected are pooled into one cell (and
// the pool merged into the largest regular cell if it still falls short);
// dof = cells - 1. Throws if fewer than two cells remain.
ChiSquaredResult chi_squared_test(const std::vector<std::uint64_t>& observed,
                                  const std::vector<double>& expected_probs,
                                  double min_expected = 5.0);

// Half L1 distance between an empirical distribution (counts/total) and an
// expected probability vector over the same cells.
double tv_distance(const std::vector<std::uint64_t>& observed,
                   const std::vector<double>& expected_probs);

// Half L1 distance between two probability vectors.
double tv_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace stego
