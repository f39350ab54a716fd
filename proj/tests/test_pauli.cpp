#include "stego/pauli.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stego/util.hpp"

using stego::PauliOperator;
using namespace stego::testing;

namespace {

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng,
                           bool random_phase = true) {
  const std::uint32_t mask = (1u << n) - 1u;
  return PauliOperator(n, static_cast<std::uint32_t>(rng()) & mask,
                       static_cast<std::uint32_t>(rng()) & mask,
                       random_phase ? static_cast<int>(rng() & 3) : 0);
}

}  // namespace

TEST_CASE("parse sets symplectic bits per character") {
  const auto g1 = PauliOperator::parse("XZZXI");
  CHECK(stego::bits_to_string(g1.z_mask(), 5) == "01100");
  CHECK(stego::bits_to_string(g1.x_mask(), 5) == "10010");
  CHECK(g1.phase_exponent() == 0);
  CHECK(g1.str() == "XZZXI");

  const auto id = PauliOperator::parse("IIIII");
  CHECK(id.is_identity_bits());
  CHECK(id.phase_exponent() == 0);
  CHECK(id.weight() == 0);
}

TEST_CASE("parse of a signed operator matches the dense matrix") {
  // -IXYY as a literal matrix, via Kronecker products of Hermitian letters.
  const Matrix kI = {1, 0, 0, 1};
  const Matrix kX = {0, 1, 1, 0};
  const Matrix kY = {0, {0, -1}, {0, 1}, 0};
  Matrix expected = kron(kron(kron(kI, kX), kY), kY);
  for (auto& v : expected) v = -v;

  const auto p = PauliOperator::parse("-IXYY");
  CHECK(stego::bits_to_string(p.x_mask(), 4) == "0111");
  CHECK(stego::bits_to_string(p.z_mask(), 4) == "0011");
  CHECK(mats_equal(to_matrix(p), expected));
  CHECK(p.str() == "-IXYY");
  CHECK(p.sign() == -1);
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(PauliOperator::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::parse("-"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(PauliOperator::parse("XZQ"),
                       doctest::Contains("position 2"), std::invalid_argument);
}

TEST_CASE("single-qubit product conventions") {
  const auto z = PauliOperator::single(1, 0, 'Z');
  const auto x = PauliOperator::single(1, 0, 'X');
  const auto y = PauliOperator::single(1, 0, 'Y');

  // Z * X has the Y bit pattern; as matrices, ZX = -iY.
  const auto zx = z * x;
  CHECK(zx.z_bit(0));
  CHECK(zx.x_bit(0));
  CHECK(zx.equal_up_to_phase(y));
  CHECK(mats_equal(to_matrix(zx), mat_mul(to_matrix(z), to_matrix(x))));

  const auto xz = x * z;
  CHECK(mats_equal(to_matrix(xz), mat_mul(to_matrix(x), to_matrix(z))));
  CHECK(!(zx == xz));
}

TEST_CASE("named multiplication examples") {
  const auto a = PauliOperator::parse("XIIII");
  const auto b = PauliOperator::parse("IZIII");
  const auto ab = a * b;
  CHECK(ab.equal_up_to_phase(PauliOperator::parse("XZIII")));
  CHECK(ab == PauliOperator::parse("XZIII"));
}

TEST_CASE("squares are the identity with a real phase") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(5, rng);
    const auto sq = p * p;
    CHECK(sq.is_identity_bits());
    CHECK((sq.phase_exponent() % 2) == 0);
    if (p.is_hermitian()) CHECK(sq.phase_exponent() == 0);
  }
}

TEST_CASE("multiplication matches the dense matrix product") {
  std::mt19937_64 rng(11);
  // Exhaustive on 1 and 2 qubits, all phases.
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<PauliOperator> all;
    for (std::uint32_t z = 0; z < (1u << n); ++z)
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        for (int ph = 0; ph < 4; ++ph) all.emplace_back(n, z, x, ph);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(mats_equal(to_matrix(a * b),
                         mat_mul(to_matrix(a), to_matrix(b))));
      }
  }
  // Random pairs on 5 qubits.
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_pauli(5, rng);
    const auto b = random_pauli(5, rng);
    CHECK(mats_equal(to_matrix(a * b), mat_mul(to_matrix(a), to_matrix(b))));
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_pauli(5, rng);
    const auto b = random_pauli(5, rng);
    const auto c = random_pauli(5, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutation agrees with the dense commutator") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::uint32_t za = 0; za < (1u << n); ++za)
      for (std::uint32_t xa = 0; xa < (1u << n); ++xa)
        for (std::uint32_t zb = 0; zb < (1u << n); ++zb)
          for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
            const PauliOperator a(n, za, xa, 0);
            const PauliOperator b(n, zb, xb, 0);
            CHECK(a.commutes_with(b) ==
                  mats_commute(to_matrix(a), to_matrix(b)));
          }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_pauli(5, rng);
    const auto b = random_pauli(5, rng);
    CHECK(a.commutes_with(b) == mats_commute(to_matrix(a), to_matrix(b)));
  }
}

TEST_CASE("named commutation examples") {
  const auto x1 = PauliOperator::parse("XIIII");
  const auto z1 = PauliOperator::parse("ZIIII");
  CHECK(!x1.commutes_with(z1));

  const auto g1 = PauliOperator::parse("XZZXI");
  const auto g2 = PauliOperator::parse("IXZZX");
  CHECK(g1.commutes_with(g2));
  CHECK(mats_commute(to_matrix(g1), to_matrix(g2)));

  const auto z5 = PauliOperator::single(5, 4, 'Z');
  CHECK(!z5.commutes_with(g2));
}

TEST_CASE("adjoint inverts the phase") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(4, rng);
    const auto prod = p.adjoint() * p;
    CHECK(prod.is_identity_bits());
    CHECK(prod.phase_exponent() == 0);
    // Dense check: adjoint matrix is the conjugate transpose.
    const auto m = to_matrix(p);
    const auto md = to_matrix(p.adjoint());
    const std::size_t d = mat_dim(m);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(std::abs(md[i * d + j] - std::conj(m[j * d + i])) < 1e-12);
  }
}

TEST_CASE("weight counts non-identity positions") {
  CHECK(PauliOperator::parse("IIIII").weight() == 0);
  CHECK(PauliOperator::parse("XZIII").weight() == 2);
  CHECK(PauliOperator::parse("YXXII").weight() == 3);
  CHECK(PauliOperator::parse("IYXXI").weight() == 3);
}

TEST_CASE("error enumeration sizes and order") {
  const auto w0 = stego::enumerate_pauli_errors(5, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].is_identity_bits());

  const auto w1 = stego::enumerate_pauli_errors(5, 1);
  CHECK(w1.size() == 15);
  CHECK(w1[0] == PauliOperator::parse("XIIII"));
  CHECK(w1[1] == PauliOperator::parse("YIIII"));
  CHECK(w1[2] == PauliOperator::parse("ZIIII"));
  CHECK(w1[3] == PauliOperator::parse("IXIII"));
  CHECK(w1[14] == PauliOperator::parse("IIIIZ"));

  const auto w2 = stego::enumerate_pauli_errors(5, 2);
  CHECK(w2.size() == 90);
  CHECK(w2[0] == PauliOperator::parse("XXIII"));
  CHECK(w2[1] == PauliOperator::parse("XYIII"));
  CHECK(w2[89] == PauliOperator::parse("IIIZZ"));

  std::set<std::uint64_t> keys;
  for (const auto& p : w1) keys.insert(p.bits_key());
  for (const auto& p : w2) keys.insert(p.bits_key());
  CHECK(keys.size() == 105);
  for (const auto& p : w1) CHECK(p.is_hermitian());
  for (const auto& p : w2) CHECK(p.sign() == 1);
}

TEST_CASE("hermitian text form round-trips") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_pauli(5, rng, false);
    // Force Hermitian: phase = y count, optionally plus 2.
    const int m = std::popcount(p.z_mask() & p.x_mask());
    const int sign_bit = static_cast<int>(rng() & 1) * 2;
    p = PauliOperator(5, p.z_mask(), p.x_mask(), m + sign_bit);
    CHECK(PauliOperator::parse(p.str()) == p);
  }
}

TEST_CASE("gate conjugation matches known images") {
  auto y = PauliOperator::single(1, 0, 'Y');
  y.conj_h(0);
  CHECK(y == PauliOperator(1, 1, 1, 3));  // H Y H = -Y

  auto x = PauliOperator::single(1, 0, 'X');
  x.conj_s(0);
  CHECK(x == PauliOperator::single(1, 0, 'Y'));  // S X S' = Y

  auto yy = PauliOperator::parse("YY");
  yy.conj_cx(0, 1);
  CHECK(yy == PauliOperator::parse("-XZ"));  // CX (Y x Y) CX = -(X x Z)
}

