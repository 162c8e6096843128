#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include "lgorb/catalog.hpp"
#include "lgorb/orbifold.hpp"
#include "lgorb/serialize.hpp"

using namespace lgorb;

namespace {

const Poly& klein() {
  static const Poly f = klein_quartic().first;
  return f;
}
const WeightSystem& weights() {
  static const WeightSystem w = klein_quartic().second;
  return w;
}

GMatrix word(const char* w) { return evaluate_word(parse_word(w)); }

const FiniteMatrixGroup& hat_slf() {
  static const FiniteMatrixGroup G = catalog_group("slf", true);
  return G;
}

std::vector<std::size_t> centralizer_of(const FiniteMatrixGroup& G, const GMatrix& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (G.element(i) * g == g * G.element(i)) out.push_back(i);
  return out;
}

// column span of the projector equals the span of the given monomials' classes
bool spans_monomials(const JacobianAlgebra& J, const CycMatrix& projector, const std::vector<Monomial>& monos) {
  const int cond = J.conductor();
  std::vector<CycVector> target;
  for (const auto& m : monos) target.push_back(J.coordinates(Poly::monomial(m, CycNum(cond, 1))));
  std::vector<CycVector> both = target;
  for (std::size_t j = 0; j < projector.cols(); ++j) both.push_back(column(projector, j));
  return rank(projector) == monos.size() && rank(from_columns(target, J.milnor(), cond)) == monos.size() &&
         rank(from_columns(both, J.milnor(), cond)) == monos.size();
}

bool palindromic(const std::vector<int>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

struct Named {
  std::string name;
  FiniteMatrixGroup group;
};

const std::vector<Named>& all_groups() {
  static const std::vector<Named> groups = [] {
    std::vector<Named> out;
    for (const auto& e : catalog_entries()) {
      out.push_back({e.key, catalog_group(e.key)});
      out.push_back({e.key + "^", catalog_group(e.key, true)});
    }
    return out;
  }();
  return groups;
}

const std::map<std::string, HHReport>& all_reports() {
  static const std::map<std::string, HHReport> reports = [] {
    std::map<std::string, HHReport> out;
    for (const auto& g : all_groups()) out.emplace(g.name, compute_hh(klein(), weights(), g.group));
    return out;
  }();
  return reports;
}

}  // namespace

TEST_CASE("sector examples", "[orbifold]") {
  const Sector s = build_sector(klein(), weights(), generator_matrix("S"));
  CHECK(s.fix_dim() == 0);
  CHECK(s.dim() == 1);
  CHECK(s.complement_indices == std::vector<std::size_t>{0, 1, 2});

  const Sector t = build_sector(klein(), weights(), generator_matrix("T"));
  CHECK(t.fix_dim() == 1);
  CHECK(t.dim() == 3);
  Poly expect(1, 28);
  expect.add_term(Monomial({4}), CycNum(28, 3));
  CHECK(t.restricted == expect);
  CHECK(t.complement_indices == std::vector<std::size_t>{0, 1});

  const Sector m = build_sector(klein(), weights(), -word("RS^2RS"));
  CHECK(m.fix_dim() == 2);
  CHECK(m.dim() == 9);
  CHECK(m.algebra.graded_dims() == std::vector<int>{1, 2, 3, 2, 1});
}

TEST_CASE("every restricted polynomial is a quartic singularity", "[orbifold]") {
  for (const auto& cls : conjugacy_classes(hat_slf()).classes) {
    const Sector s = build_sector(klein(), weights(), hat_slf().element(cls.representative));
    CHECK(is_quasihomogeneous(s.restricted, WeightSystem::uniform(s.fix_dim(), 4)));
    CHECK(palindromic(s.algebra.graded_dims()));
  }
}

TEST_CASE("rho special values", "[orbifold]") {
  const GMatrix g = generator_matrix("T");
  CHECK(rho(GMatrix::identity(3, 28), g) == CycNum(28, 1));
  CHECK(rho(g, g * g) == g.det());
  const GMatrix s = generator_matrix("S");
  const Sector sec = build_sector(klein(), weights(), s);
  const FiniteMatrixGroup cyc = generate_closure({s, generator_matrix("-I")});
  for (const auto& h : cyc.elements()) CHECK(rho(h, sec) == h.det());
  CHECK_THROWS_AS(rho(generator_matrix("T"), generator_matrix("S")), NotCentralizing);
}

TEST_CASE("rho is a cocycle on centralizers", "[orbifold][property]") {
  const FiniteMatrixGroup& G = hat_slf();
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const GMatrix& g = G.element(pick(rng));
    const Sector sec = build_sector(klein(), weights(), g);
    const auto z = centralizer_of(G, g);
    std::uniform_int_distribution<std::size_t> zp(0, z.size() - 1);
    const GMatrix& h1 = G.element(z[zp(rng)]);
    const GMatrix& h2 = G.element(z[zp(rng)]);
    CHECK(rho(h2, sec) * rho(h1, sec) == rho(h2 * h1, sec));
    CHECK(rho(h1, sec) == rho(h1, g));
  }
}

TEST_CASE("sector_action is a representation of the centralizer", "[orbifold][property]") {
  const FiniteMatrixGroup& G = hat_slf();
  std::mt19937 rng(202);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (int trial = 0; trial < 15; ++trial) {
    const GMatrix& g = G.element(pick(rng));
    const Sector sec = build_sector(klein(), weights(), g);
    const auto z = centralizer_of(G, g);
    std::uniform_int_distribution<std::size_t> zp(0, z.size() - 1);
    const GMatrix& h1 = G.element(z[zp(rng)]);
    const GMatrix& h2 = G.element(z[zp(rng)]);
    CHECK(sector_action(h2, sec) * sector_action(h1, sec) == sector_action(h2 * h1, sec));
  }
  const Sector id = build_sector(klein(), weights(), G.element(0));
  CHECK(sector_action(G.element(0), id) == identity_matrix(27, 28));
}

TEST_CASE("one-dimensional sectors scale by det h / lambda^(k+1)", "[orbifold]") {
  const FiniteMatrixGroup& G = hat_slf();
  for (const auto& cls : conjugacy_classes(G).classes) {
    const GMatrix& g = G.element(cls.representative);
    const Sector sec = build_sector(klein(), weights(), g);
    if (sec.fix_dim() != 1) continue;
    for (auto i : centralizer_of(G, g)) {
      const GMatrix& h = G.element(i);
      const CycNum lambda = restriction_to_fix(h, sec)(0, 0);
      const CycMatrix act = sector_action(h, sec);
      CycNum p = lambda;
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(act(k, k) == h.det() / p);
        p = p * lambda;
      }
    }
  }
  const Sector t = build_sector(klein(), weights(), generator_matrix("T"));
  const CycMatrix minus = sector_action(generator_matrix("-I"), t);
  CHECK(minus(0, 0) == CycNum(28, 1));
  CHECK(minus(1, 1) == CycNum(28, -1));
  CHECK(minus(2, 2) == CycNum(28, 1));
}

TEST_CASE("det -1 element on its own two-dimensional sector acts by -1", "[orbifold]") {
  const GMatrix g = -word("RS^2RS");
  const Sector sec = build_sector(klein(), weights(), g);
  CycMatrix minus = identity_matrix(9, 28);
  for (std::size_t i = 0; i < 9; ++i) minus(i, i) = CycNum(28, -1);
  CHECK(sector_action(g, sec) == minus);
}

TEST_CASE("Reynolds operator matches averaging the actions", "[orbifold][property]") {
  for (const char* key : {"e", "f", "g"}) {
    const FiniteMatrixGroup G = catalog_group(key, true);
    for (const auto& cls : conjugacy_classes(G).classes) {
      const GMatrix& g = G.element(cls.representative);
      const Sector sec = build_sector(klein(), weights(), g);
      std::vector<GMatrix> z;
      std::vector<CycMatrix> acts;
      for (auto i : centralizer_of(G, g)) {
        z.push_back(G.element(i));
        acts.push_back(sector_action(G.element(i), sec));
      }
      const InvariantSpace a = invariant_subspace(acts);
      const CycMatrix r = reynolds_operator(sec, z);
      CHECK(a.projector == r);
      CHECK(r * r == r);
    }
  }
}

TEST_CASE("invariants of the trivial group are everything", "[orbifold]") {
  const InvariantSpace s = invariant_subspace({identity_matrix(5, 7)});
  CHECK(s.dim == 5);
}

TEST_CASE("identity-sector invariants of <T, S>", "[orbifold]") {
  const FiniteMatrixGroup G = catalog_group("h");
  const Sector sec = build_sector(klein(), weights(), G.element(0));
  const CycMatrix p = reynolds_operator(sec, G.elements());
  CHECK(spans_monomials(sec.algebra, p, {Monomial({0, 0, 0}), Monomial({1, 1, 1}), Monomial({2, 2, 2})}));
}

TEST_CASE("hat V_4 invariants are all in the identity sector", "[orbifold]") {
  const FiniteMatrixGroup G = catalog_group("e", true);
  const HHReport r = compute_hh(klein(), weights(), G);
  CHECK(r.total_dim == 8);
  CHECK(r.identity_dim() == 8);
  const Sector sec = build_sector(klein(), weights(), G.element(0));
  const CycMatrix p = reynolds_operator(sec, G.elements());
  // the monomials themselves are not invariant; their averages span
  std::vector<CycVector> averaged;
  for (const Monomial& m : {Monomial({0, 0, 0}), Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({0, 2, 0}),
                            Monomial({2, 2, 0}), Monomial({2, 1, 1}), Monomial({2, 0, 2}), Monomial({2, 2, 2})})
    averaged.push_back(p * sec.algebra.coordinates(Poly::monomial(m, CycNum(28, 1))));
  CHECK(rank(p) == 8);
  CHECK(rank(from_columns(averaged, sec.algebra.milnor(), 28)) == 8);
}

TEST_CASE("Klein four-group twisted sectors keep the linear class", "[orbifold]") {
  const FiniteMatrixGroup G = catalog_group("e");
  for (std::size_t i = 1; i < G.order(); ++i) {
    const Sector sec = build_sector(klein(), weights(), G.element(i));
    const InvariantSpace inv = image_of_projector(reynolds_operator(sec, G.elements()));
    REQUIRE(inv.dim == 1);
    CHECK(sec.algebra.basis_degree(inv.seeds[0]) == 1);
  }
}

TEST_CASE("totals and identity vectors of compute_hh", "[orbifold]") {
  const auto& R = all_reports();
  CHECK(R.at("slf").total_dim == 11);
  CHECK(R.at("e").total_dim == 12);
  CHECK(R.at("e").identity_dimension_vector == std::vector<int>{1, 0, 3, 1, 3, 0, 1});
  for (const auto& [name, r] : R) {
    std::size_t sum = 0;
    for (const auto& s : r.sectors) {
      sum += s.invariant_dim;
      CHECK(s.invariant_dim <= s.sector_dim_raw);
    }
    CHECK(sum == r.total_dim);
    CHECK(palindromic(r.identity_dimension_vector));
  }
}

TEST_CASE("totals agree with the character-trace count", "[orbifold][oracle]") {
  for (const auto& g : all_groups()) {
    INFO(g.name);
    const HHReport& r = all_reports().at(g.name);
    const auto classes = conjugacy_classes(g.group).classes;
    for (std::size_t c = 0; c < classes.size(); ++c)
      CHECK(static_cast<long>(r.sectors[c].invariant_dim) ==
            oracle::sector_invariant_count(g.group, classes[c].representative));
  }
}

TEST_CASE("vanishing rules", "[orbifold]") {
  for (const auto& g : all_groups()) {
    INFO(g.name);
    const HHReport& r = all_reports().at(g.name);
    const bool central_minus = g.group.contains_minus_identity();
    for (const auto& s : r.sectors) {
      if (s.rep_det == CycNum(28, -1) && s.fix_dim == 2) CHECK(s.invariant_dim == 0);
      if (s.fix_dim == 0 && central_minus) CHECK(s.invariant_dim == 0);
    }
  }
}

TEST_CASE("abelian groups: per-element sum equals the class decomposition", "[orbifold][property]") {
  for (const char* key : {"a", "b", "c", "d", "e"}) {
    for (bool hat : {false, true}) {
      const FiniteMatrixGroup G = catalog_group(key, hat);
      std::size_t total = 0;
      for (const auto& g : G.elements()) {
        const Sector sec = build_sector(klein(), weights(), g);
        std::vector<CycMatrix> acts;
        for (const auto& h : G.elements()) acts.push_back(sector_action(h, sec));
        total += invariant_subspace(acts).dim;
      }
      CHECK(total == all_reports().at(std::string(key) + (hat ? "^" : "")).total_dim);
    }
  }
}

TEST_CASE("conjugate groups have equal totals", "[orbifold][property]") {
  const FiniteMatrixGroup& S = catalog_group("slf");
  std::mt19937 rng(303);
  std::uniform_int_distribution<std::size_t> pick(0, 167);
  for (const char* key : {"c", "e", "g"}) {
    const FiniteMatrixGroup G = catalog_group(key);
    for (int trial = 0; trial < 3; ++trial) {
      const FiniteMatrixGroup H = conjugate_group(G, S.element(pick(rng)));
      CHECK(compute_hh(klein(), weights(), H).total_dim == all_reports().at(key).total_dim);
    }
  }
}

TEST_CASE("threaded computation matches sequential", "[orbifold]") {
  const FiniteMatrixGroup G = catalog_group("g", true);
  HHOptions seq, par;
  par.threads = 4;
  const HHReport a = compute_hh(klein(), weights(), G, seq);
  const HHReport b = compute_hh(klein(), weights(), G, par);
  CHECK(a == b);
}

TEST_CASE("identity-sector products: unit law and closure", "[orbifold]") {
  const FiniteMatrixGroup G = catalog_group("e", true);
  const ProductTable t = identity_sector_products(klein(), weights(), G);
  REQUIRE(t.basis.size() == 8);
  std::size_t unit = t.basis.size();
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    if (t.labels[i] == "1") unit = i;
  REQUIRE(unit < t.basis.size());
  for (std::size_t j = 0; j < t.basis.size(); ++j) {
    CycVector e(t.basis.size(), CycNum(28));
    e[j] = CycNum(28, 1);
    CHECK(t.products[unit][j] == e);
  }
  CHECK_THROWS_AS(identity_sector_products(klein(), weights(), G, {Monomial({1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("input validation", "[orbifold]") {
  const GMatrix bad = GMatrix::diagonal({zeta(28, 1), CycNum(28, 1), CycNum(28, 1)});
  CHECK_THROWS_AS(compute_hh(klein(), weights(), generate_closure({bad})), InadmissibleGroup);
  const GMatrix flip = GMatrix::diagonal({CycNum(28, -1), CycNum(28, 1), CycNum(28, 1)});
  CHECK_THROWS_AS(compute_hh(klein(), weights(), generate_closure({flip})), NotASymmetry);
}

TEST_CASE("surface cohomology", "[orbifold]") {
  CHECK(surface_cohomology_dim(3) == 8);
  CHECK(surface_cohomology_dim(1) == 4);
  CHECK(surface_cohomology_dim(0) == 2);
}
