#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include "lgorb/cycnum.hpp"

using namespace lgorb;

namespace {

CycNum z7(int k) { return zeta(7, k); }

CycNum gauss_sum() { return z7(1) + z7(2) + z7(4) - z7(3) - z7(5) - z7(6); }

}  // namespace

TEST_CASE("zeta reduces exponents mod n", "[cycnum]") {
  CHECK(zeta(7, 0) == CycNum(7, 1));
  CHECK(zeta(7, 7) == CycNum(7, 1));
  CHECK(zeta(7, -1) == zeta(7, 6));
  CHECK(zeta(7, 1).conductor() == 7);
}

TEST_CASE("zeta_7^6 is -1 - z - ... - z^5", "[cycnum]") {
  const CycNum z6 = zeta(7, 6);
  REQUIRE(z6.degree() == 6);
  for (int k = 0; k < 6; ++k) CHECK(z6.coeff(k) == -1);
}

TEST_CASE("inverse pairs of roots of unity", "[cycnum]") {
  CHECK(cyc_mul(z7(1), z7(6)) == CycNum(7, 1));
  for (int k = 1; k < 7; ++k) CHECK(cyc_inverse(z7(k)) == z7(7 - k));
}

TEST_CASE("s * s = -7 against exponent counting", "[cycnum]") {
  // s = sum eps_k z^k; the product has coefficient sum_{j+k = m mod 7} eps_j eps_k
  const int eps[7] = {0, 1, 1, -1, 1, -1, -1};
  long c[7] = {0};
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k) c[(j + k) % 7] += eps[j] * eps[k];
  // reduce with z^6 = -(1 + z + ... + z^5)
  for (int m = 0; m < 6; ++m) c[m] -= c[6];
  const CycNum s2 = cyc_mul(gauss_sum(), gauss_sum());
  for (int m = 0; m < 6; ++m) CHECK(s2.coeff(m) == c[m]);
  CHECK(s2 == CycNum(7, -7));
}

TEST_CASE("inverse of s is -s/7", "[cycnum]") {
  const CycNum s = gauss_sum();
  CHECK(cyc_inverse(s) == -s.scaled(Rational(1, 7)));
  CHECK(s * cyc_inverse(s) == CycNum(7, 1));
}

TEST_CASE("lifting to a multiple conductor", "[cycnum]") {
  CHECK(lift_conductor(z7(1), 28) == zeta(28, 4));
  CHECK(lift_conductor(zeta(4, 1), 28) == zeta(28, 7));
  CHECK(lcm_conductor(7, 4) == 28);
  CHECK_THROWS_AS(z7(1).lifted(30), std::invalid_argument);
}

TEST_CASE("mixed conductors and zero division are errors", "[cycnum]") {
  CHECK_THROWS_AS(z7(1) + zeta(4, 1), ConductorMismatch);
  CHECK_THROWS_AS(z7(1) * zeta(28, 1), ConductorMismatch);
  CHECK_THROWS_AS(CycNum(7).inverse(), DivisionByZero);
}

TEST_CASE("printing", "[cycnum]") {
  CHECK(CycNum(7).to_string() == "0");
  CHECK(CycNum(7, Rational(-3, 2)).to_string() == "-3/2");
  CHECK(z7(1).to_string() == "z");
}

TEST_CASE("field axioms on random elements", "[cycnum][property]") {
  std::mt19937 rng(1234);
  for (int n : {1, 3, 4, 7, 12, 28}) {
    for (int trial = 0; trial < 25; ++trial) {
      const CycNum a = oracle::random_cyc(rng, n), b = oracle::random_cyc(rng, n), c = oracle::random_cyc(rng, n);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == CycNum(n));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycNum(n, 1));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("arithmetic agrees with the complex embedding", "[cycnum][property]") {
  std::mt19937 rng(99);
  for (int n : {5, 7, 9, 28}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycNum a = oracle::random_cyc(rng, n), b = oracle::random_cyc(rng, n);
      CHECK(oracle::close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a + b), oracle::embed(a) + oracle::embed(b)));
      if (!b.is_zero()) CHECK(oracle::close(oracle::embed(a / b), oracle::embed(a) / oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a), a.approx()));
    }
  }
}

TEST_CASE("lifting preserves values and commutes with arithmetic", "[cycnum][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const CycNum a = oracle::random_cyc(rng, 7), b = oracle::random_cyc(rng, 7);
    CHECK((a * b).lifted(28) == a.lifted(28) * b.lifted(28));
    CHECK(oracle::close(oracle::embed(a.lifted(28)), oracle::embed(a)));
    CHECK(a.lifted(56) == a.lifted(28).lifted(56));
  }
}

TEST_CASE("equal values hash equally", "[cycnum]") {
  const CycNum a = z7(3) * z7(5);
  const CycNum b = z7(1);
  CHECK(a == b);
  CHECK(CycNumHash{}(a) == CycNumHash{}(b));
  CHECK(CycNum(28, Rational(2, 4)) == CycNum(28, Rational(1, 2)));
}
