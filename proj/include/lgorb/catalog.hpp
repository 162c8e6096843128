// Klein quartic data: the polynomial, the generators R, S, T of its
// symmetry group, the subgroup catalog and the recorded results for it.

#ifndef LGORB_CATALOG_HPP_
#define LGORB_CATALOG_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/cycnum.hpp"
#include "lgorb/matgroup.hpp"
#include "lgorb/poly.hpp"
#include "lgorb/word.hpp"

namespace lgorb {

inline constexpr int kKleinConductor = 28;

struct UnknownCatalogKey : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// f = x1^3 x2 + x2^3 x3 + x3^3 x1 with weights (1,1,1; 4).
inline std::pair<Poly, WeightSystem> klein_quartic(int conductor = kKleinConductor) {
  Poly f(3, conductor);
  const CycNum one(conductor, 1);
  f.add_term(Monomial({3, 1, 0}), one);
  f.add_term(Monomial({0, 3, 1}), one);
  f.add_term(Monomial({1, 0, 3}), one);
  return {f, WeightSystem::uniform(3, 4)};
}

/// R, S, T, -I and j_f = diag(i, i, i) at the Klein conductor.
inline GMatrix generator_matrix(const std::string& name) {
  const int n = kKleinConductor;
  auto z7 = [&](int k) { return lift_conductor(zeta(7, k), n); };
  if (name == "S") return GMatrix::diagonal({z7(4), z7(2), z7(1)});
  if (name == "T") {
    CycMatrix t = zero_matrix(3, 3, n);
    t(0, 1) = t(1, 2) = t(2, 0) = CycNum(n, 1);
    return GMatrix(t);
  }
  if (name == "-I") return -GMatrix::identity(3, n);
  if (name == "j_f") return GMatrix::diagonal({zeta(n, 7), zeta(n, 7), zeta(n, 7)});
  if (name == "R") {
    // sqrt(-1)/sqrt(7) = s/7 with s = z + z^2 + z^4 - z^3 - z^5 - z^6
    const CycNum s = z7(1) + z7(2) + z7(4) - z7(3) - z7(5) - z7(6);
    const CycNum scale = s.scaled(Rational(1, 7));
    const CycNum a = z7(1) - z7(6), b = z7(2) - z7(5), c = z7(4) - z7(3);
    CycMatrix r = zero_matrix(3, 3, n);
    const CycNum rows[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = rows[i][j] * scale;
    return GMatrix(r);
  }
  throw UnknownGenerator("unknown generator '" + name + "'");
}

/// Product of the named generators, negative exponents through inverses.
inline GMatrix evaluate_word(const GeneratorWord& w, std::size_t dim = 3, int conductor = kKleinConductor) {
  GMatrix out = GMatrix::identity(dim, conductor);
  for (const auto& t : w.tokens()) {
    GMatrix base = generator_matrix(t.base);
    if (base.dim() != dim) throw ShapeMismatch("generator dimension differs from word dimension");
    if (t.exponent < 0) base = base.inverse();
    for (long k = 0; k < (t.exponent < 0 ? -t.exponent : t.exponent); ++k) out = out * base;
  }
  return out;
}

enum class Trust { PaperConfirmed, PaperDisputed };

inline std::string to_string(Trust t) {
  return t == Trust::PaperConfirmed ? "paper-confirmed" : "paper-disputed";
}

struct ExpectedResult {
  int total_dim = 0;
  int identity_dim = 0;
  std::optional<std::vector<int>> identity_dimension_vector;
  // twisted sector invariant dimensions, one per non-identity class
  std::optional<std::vector<int>> per_sector_dims;
  std::optional<int> hat_total;
  Trust trust = Trust::PaperConfirmed;
};

struct CatalogEntry {
  std::string key;
  std::vector<std::string> generator_words;
  std::string description;
  std::size_t order = 0;
  ExpectedResult expected;
  std::optional<ExpectedResult> expected_hat;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  using V = std::vector<int>;
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    auto add = [&](std::string key, std::vector<std::string> words, std::string desc, std::size_t order,
                   ExpectedResult ex) {
      e.push_back(CatalogEntry{std::move(key), std::move(words), std::move(desc), order, std::move(ex), {}});
    };
    add("slf", {"R", "T", "S"}, "the full group SL_f = PSL(2,7)", 168,
        {11, 2, V{1, 0, 0, 0, 0, 0, 1}, V{1, 1, 1, 3, 3}, 10});
    e.back().expected_hat = ExpectedResult{10, 2, V{1, 0, 0, 0, 0, 0, 1}, V{0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2}};
    add("a", {"S"}, "8 conjugate elementary abelian groups of order 7", 7,
        {9, 3, V{1, 0, 0, 1, 0, 0, 1}, V{1, 1, 1, 1, 1, 1}, {}});
    add("b", {"T"}, "28 conjugate cyclic groups of order 3", 3,
        {17, 11, V{1, 1, 2, 3, 2, 1, 1}, V{3, 3}, {}});
    add("c", {"RSRS^5"}, "21 conjugate cyclic groups of order 4", 4,
        {18, 9, V{1, 1, 2, 1, 2, 1, 1}, V{3, 3, 3}, {}});
    add("d", {"RT"}, "21 conjugate cyclic groups of order 2", 2,
        {18, 15, V{1, 1, 4, 3, 4, 1, 1}, V{3}, {}});
    add("e", {"RS^2RS", "SRS^6"}, "two classes of 7 conjugate Klein 4-groups", 4,
        {12, 9, V{1, 0, 3, 1, 3, 0, 1}, V{1, 1, 1}, 8});
    e.back().expected_hat = ExpectedResult{8, 8, V{1, 0, 3, 0, 3, 0, 1}, V{0, 0, 0, 0, 0, 0, 0}};
    add("f", {"T", "R"}, "28 dihedral nonabelian groups of order 6", 6,
        {13, 7, V{1, 0, 2, 1, 2, 0, 1}, V{3, 3}, {}});
    add("g", {"RS^3", "RS^2RS"}, "21 dihedral nonabelian groups of order 8", 8,
        {9, 6, V{1, 0, 2, 0, 2, 0, 1}, V{0, 1, 1, 1}, {}});
    add("h", {"T", "S"}, "8 nonabelian groups of order 21", 21,
        {11, 3, V{1, 0, 0, 1, 0, 0, 1}, V{3, 3, 1, 1}, {}});
    add("i", {"TS^4", "TRS^2RS^3"}, "two classes of 7 conjugates of the symmetric group S_4", 24,
        {12, 4, V{1, 0, 1, 0, 1, 0, 1}, V{1, 3, 3, 1}, {}});
    add("j", {"TS^4", "T^2RS^6RS^4"},
        "two classes of 7 conjugates of the alternating group A_4", 12,
        {14, 10, V{1, 0, 3, 2, 3, 0, 1}, V{3, 1}, {}, Trust::PaperDisputed});
    return e;
  }();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog_entries())
    if (e.key == key) return e;
  throw UnknownCatalogKey("unknown catalog key '" + key + "'");
}

inline ExpectedResult expected(const std::string& key, bool hat = false) {
  const CatalogEntry& e = catalog_entry(key);
  if (!hat) return e.expected;
  if (e.expected_hat) return *e.expected_hat;
  throw UnknownCatalogKey("no recorded result for the extension of '" + key + "'");
}

namespace detail {

inline FiniteMatrixGroup closure_of_words(const std::vector<GeneratorWord>& words) {
  std::vector<GMatrix> gens;
  std::vector<GeneratorWord> labels;
  for (const auto& w : words) {
    gens.push_back(evaluate_word(w));
    labels.push_back(w);
  }
  return generate_closure(gens, labels);
}

// (j) = <c3, v4> must sit inside (i) = <c3, c4>.
inline void check_alternating_subgroup(const FiniteMatrixGroup& j) {
  const FiniteMatrixGroup i = closure_of_words({parse_word("TS^4"), parse_word("TRS^2RS^3")});
  for (const auto& g : j.elements())
    if (!i.contains(g)) throw std::logic_error("group (j) is not contained in group (i)");
  if (j.order() != 12) throw std::logic_error("group (j) does not have order 12");
}

}  // namespace detail

/// Closure of the catalog generators; hat adjoins -id.
inline FiniteMatrixGroup catalog_group(const std::string& key, bool hat = false) {
  const CatalogEntry& e = catalog_entry(key);
  std::vector<GeneratorWord> words;
  for (const auto& w : e.generator_words) words.push_back(parse_word(w));
  FiniteMatrixGroup g = detail::closure_of_words(words);
  if (key == "j") detail::check_alternating_subgroup(g);
  if (!hat) return g;
  return hat_extend(g).group;
}

}  // namespace lgorb

#endif  // LGORB_CATALOG_HPP_
