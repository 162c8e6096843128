#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include "lgorb/catalog.hpp"
#include "lgorb/jacobian.hpp"

using namespace lgorb;

namespace {

const JacobianAlgebra& klein_algebra() {
  static const JacobianAlgebra J = [] {
    const auto [f, w] = klein_quartic();
    return jacobian_algebra(f, w);
  }();
  return J;
}

Poly mono(int a, int b, int c, int cond = 28) { return Poly::monomial(Monomial({a, b, c}), CycNum(cond, 1)); }

}  // namespace

TEST_CASE("Klein Jacobian algebra dimensions", "[jacobian]") {
  const JacobianAlgebra& J = klein_algebra();
  CHECK(J.milnor() == 27);
  CHECK(J.graded_dims() == std::vector<int>{1, 3, 6, 7, 6, 3, 1});
  CHECK(J.socle_degree() == 6);
}

TEST_CASE("Milnor number by the weighted formula", "[jacobian]") {
  // prod (d_f - d_i) / d_i
  const auto [f, w] = klein_quartic();
  long mu = 1;
  for (int d : w.weights) mu *= (w.total - d) / d;
  CHECK(static_cast<long>(klein_algebra().milnor()) == mu);
}

TEST_CASE("monomials with exponents at most 2 form a basis", "[jacobian]") {
  const JacobianAlgebra& J = klein_algebra();
  std::vector<std::vector<mpq_class>> rows;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const CycVector v = J.coordinates(mono(a, b, c));
        std::vector<mpq_class> row;
        for (const auto& x : v)
          for (const auto& q : x.coeffs()) row.push_back(q);
        rows.push_back(row);
      }
  CHECK(oracle::rational_rank(rows) == 27);
}

TEST_CASE("Hessian class is 756 (x1x2x3)^2", "[jacobian]") {
  const JacobianAlgebra& J = klein_algebra();
  const Poly nf = J.normal_form(hessian(J.source()));
  CHECK(nf == J.normal_form(mono(2, 2, 2).scaled(CycNum(28, 756))));
  CHECK_FALSE(nf.is_zero());
  // independently: hess - 756 (x1x2x3)^2 lies in the degree-6 slice of the ideal
  oracle::IntPoly diff = oracle::add(oracle::hessian_sarrus(oracle::klein_int()), {{{2, 2, 2}, 756}}, -1);
  CHECK(oracle::in_jacobian_ideal(diff, oracle::klein_int(), 6));
  CHECK_FALSE(oracle::in_jacobian_ideal({{{2, 2, 2}, 1}}, oracle::klein_int(), 6));
}

TEST_CASE("residue pairing values", "[jacobian]") {
  const JacobianAlgebra& J = klein_algebra();
  const Poly one = Poly::constant(3, CycNum(28, 1));
  CHECK(residue_pairing(one, hessian(J.source()), J) == CycNum(28, 1));
  CHECK(residue_pairing(one, one, J).is_zero());
  CHECK(residue_pairing(mono(1, 1, 1), mono(1, 1, 1), J) == CycNum(28, Rational(1, 756)));
}

TEST_CASE("pairing is nondegenerate between complementary degrees", "[jacobian][property]") {
  const JacobianAlgebra& J = klein_algebra();
  for (int d = 0; d <= 3; ++d) {
    std::vector<std::size_t> lo, hi;
    for (std::size_t i = 0; i < J.milnor(); ++i) {
      if (J.basis_degree(i) == d) lo.push_back(i);
      if (J.basis_degree(i) == 6 - d) hi.push_back(i);
    }
    REQUIRE(lo.size() == hi.size());
    CycMatrix m = zero_matrix(lo.size(), hi.size(), 28);
    for (std::size_t a = 0; a < lo.size(); ++a)
      for (std::size_t b = 0; b < hi.size(); ++b)
        m(a, b) = residue_pairing(Poly::monomial(J.basis()[lo[a]], CycNum(28, 1)),
                                  Poly::monomial(J.basis()[hi[b]], CycNum(28, 1)), J);
    CHECK(rank(m) == lo.size());
  }
}

TEST_CASE("pairing is symmetric and bilinear", "[jacobian][property]") {
  const JacobianAlgebra& J = klein_algebra();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Poly u(3, 28), v(3, 28), x(3, 28);
    for (std::size_t i = 0; i < J.milnor(); ++i) {
      u.add_term(J.basis()[i], oracle::random_cyc(rng, 28, 2));
      v.add_term(J.basis()[(i * 7) % J.milnor()], oracle::random_cyc(rng, 28, 2));
      x.add_term(J.basis()[(i * 5) % J.milnor()], oracle::random_cyc(rng, 28, 2));
    }
    CHECK(residue_pairing(u, v, J) == residue_pairing(v, u, J));
    CHECK(residue_pairing(u + x, v, J) == residue_pairing(u, v, J) + residue_pairing(x, v, J));
  }
}

TEST_CASE("coordinates are idempotent and multiplicative", "[jacobian][property]") {
  const JacobianAlgebra& J = klein_algebra();
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Poly a(3, 28), b(3, 28);
    for (int t = 0; t < 4; ++t) {
      a.add_term(Monomial({e(rng), e(rng), e(rng) % 2}), oracle::random_cyc(rng, 28, 2));
      b.add_term(Monomial({e(rng) % 2, e(rng), e(rng)}), oracle::random_cyc(rng, 28, 2));
    }
    const Poly na = J.normal_form(a), nb = J.normal_form(b);
    CHECK(J.normal_form(na) == na);
    CHECK(J.normal_form(na * nb) == J.normal_form(a * b));
  }
}

TEST_CASE("one-variable and zero-variable algebras", "[jacobian]") {
  Poly x4(1, 28);
  x4.add_term(Monomial({4}), CycNum(28, 3));
  const JacobianAlgebra J1 = jacobian_algebra(x4, WeightSystem::uniform(1, 4));
  CHECK(J1.milnor() == 3);
  CHECK(J1.graded_dims() == std::vector<int>{1, 1, 1});

  const JacobianAlgebra J0 = jacobian_algebra(Poly(0, 28), WeightSystem{{}, 4});
  CHECK(J0.milnor() == 1);
  CHECK(J0.graded_dims() == std::vector<int>{1});
}

TEST_CASE("two-variable restriction has a 9-dimensional palindromic algebra", "[jacobian]") {
  Poly g(2, 1);
  g.add_term(Monomial({3, 1}), CycNum(1, 1));
  g.add_term(Monomial({1, 3}), CycNum(1, 1));
  const JacobianAlgebra J = jacobian_algebra(g, WeightSystem::uniform(2, 4));
  CHECK(J.milnor() == 9);
  auto dims = J.graded_dims();
  CHECK(dims == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(std::equal(dims.begin(), dims.end(), dims.rbegin()));
}

TEST_CASE("bad inputs", "[jacobian]") {
  const auto [f, w] = klein_quartic();
  CHECK_THROWS_AS(jacobian_algebra(f, WeightSystem::uniform(3, 5)), NotQuasihomogeneous);
  Poly xy(2, 1);
  xy.add_term(Monomial({2, 2}), CycNum(1, 1));
  CHECK_THROWS_AS(jacobian_algebra(xy, WeightSystem::uniform(2, 4)), InfiniteQuotient);
}
