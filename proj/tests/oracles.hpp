#pragma once

// Test-only dense linear algebra oracles. Everything here reconstructs
// operators and states from explicit 2^n x 2^n complex matrices, independent
// of the symplectic bit arithmetic under test.

#include <complex>
#include <cstddef>
#include <vector>

#include "stego/pauli.hpp"

namespace stego::testing {

using cplx = std::complex<double>;
using Matrix = std::vector<cplx>;  // row-major, square

inline std::size_t mat_dim(const Matrix& m) {
  std::size_t d = 1;
  while (d * d < m.size()) ++d;
  return d;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t d = mat_dim(a);
  Matrix out(d * d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a[i * d + k];
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b[k * d + j];
    }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = mat_dim(a), db = mat_dim(b);
  const std::size_t d = da * db;
  Matrix out(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out[(i * db + k) * d + (j * db + l)] = a[i * da + j] * b[k * db + l];
  return out;
}

// Dense matrix of a PauliOperator, qubit 0 as the most significant factor.
// Built from the literal per-qubit Z^z X^x products times i^phase, which is
// the representation's defining equation.
inline Matrix to_matrix(const stego::PauliOperator& p) {
  static const Matrix kI = {1, 0, 0, 1};
  static const Matrix kX = {0, 1, 1, 0};
  static const Matrix kZ = {1, 0, 0, -1};
  static const Matrix kZX = {0, 1, -1, 0};  // Z * X

  Matrix acc = {1};
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    const bool z = p.z_bit(q), x = p.x_bit(q);
    const Matrix& factor = z ? (x ? kZX : kZ) : (x ? kX : kI);
    acc = kron(acc, factor);
  }
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx scale = kIPow[p.phase_exponent() & 3];
  for (auto& v : acc) v *= scale;
  return acc;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline bool mats_equal(const Matrix& a, const Matrix& b, double tol = 1e-12) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

inline bool mats_commute(const Matrix& a, const Matrix& b,
                         double tol = 1e-12) {
  return mats_equal(mat_mul(a, b), mat_mul(b, a), tol);
}

inline std::vector<cplx> mat_apply(const Matrix& m,
                                   const std::vector<cplx>& v) {
  const std::size_t d = mat_dim(m);
  std::vector<cplx> out(d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i] += m[i * d + j] * v[j];
  return out;
}

}  // namespace stego::testing
