// Finite groups of invertible matrices over a cyclotomic field, enumerated
// explicitly: closure, conjugacy classes, centralizers, fixed spaces and the
// central extension by -id.

#ifndef LGORB_MATGROUP_HPP_
#define LGORB_MATGROUP_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgorb/cycnum.hpp"
#include "lgorb/linalg.hpp"
#include "lgorb/word.hpp"

namespace lgorb {

struct SingularMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An invertible square matrix with its determinant cached.
class GMatrix {
 public:
  GMatrix() = default;

  explicit GMatrix(CycMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw ShapeMismatch("group element must be square");
    det_ = determinant(entries_);
    if (det_.is_zero()) throw SingularMatrix("matrix is singular");
    hash_ = compute_hash();
  }

  static GMatrix identity(std::size_t n, int conductor) {
    return GMatrix(identity_matrix(n, conductor), CycNum(conductor, 1));
  }

  static GMatrix diagonal(const std::vector<CycNum>& diag) {
    const int cond = diag.at(0).conductor();
    CycMatrix m = zero_matrix(diag.size(), diag.size(), cond);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return GMatrix(std::move(m));
  }

  std::size_t dim() const { return entries_.rows(); }
  int conductor() const { return matrix_conductor(entries_); }
  const CycMatrix& entries() const { return entries_; }
  const CycNum& det() const { return det_; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  GMatrix operator*(const GMatrix& b) const { return GMatrix(entries_ * b.entries_, det_ * b.det_); }

  GMatrix operator-() const {
    CycMatrix m = scaled(entries_, CycNum(conductor(), -1));
    const CycNum d = dim() % 2 == 0 ? det_ : -det_;
    return GMatrix(std::move(m), d);
  }

  GMatrix inverse() const {
    auto inv = lgorb::inverse(entries_);
    return GMatrix(std::move(*inv), det_.inverse());
  }

  GMatrix lifted(int conductor) const {
    return GMatrix(lift_matrix(entries_, conductor), det_.lifted(conductor));
  }

  bool is_identity() const { return entries_ == identity_matrix(dim(), conductor()); }

  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.hash_ == b.hash_ && a.entries_ == b.entries_;
  }

  std::size_t hash() const { return hash_; }

 private:
  GMatrix(CycMatrix entries, CycNum det) : entries_(std::move(entries)), det_(std::move(det)) {
    hash_ = compute_hash();
  }

  std::size_t compute_hash() const {
    std::size_t h = entries_.rows();
    for (const auto& c : entries_.data()) h = h * 1000003 ^ c.hash();
    return h;
  }

  CycMatrix entries_;
  CycNum det_;
  std::size_t hash_ = 0;
};

struct GMatrixHash {
  std::size_t operator()(const GMatrix& g) const { return g.hash(); }
};

class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;

  /// Elements must be closed under products; element 0 must be the identity.
  FiniteMatrixGroup(std::vector<GMatrix> elements, std::vector<GeneratorWord> words,
                    std::vector<GeneratorWord> generator_words)
      : elements_(std::move(elements)),
        words_(std::move(words)),
        generator_words_(std::move(generator_words)) {
    if (elements_.empty() || !elements_[0].is_identity())
      throw std::invalid_argument("group element list must start with the identity");
    if (words_.size() != elements_.size()) words_.assign(elements_.size(), GeneratorWord());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second)
        throw std::invalid_argument("duplicate group element");
    }
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto it = index_.find(elements_[i].inverse());
      if (it == index_.end()) throw std::invalid_argument("element list is not closed under inverses");
      inverse_[i] = it->second;
    }
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t dimension() const { return elements_[0].dim(); }
  int conductor() const { return elements_[0].conductor(); }

  const std::vector<GMatrix>& elements() const { return elements_; }
  const GMatrix& element(std::size_t i) const { return elements_.at(i); }
  const GeneratorWord& word(std::size_t i) const { return words_.at(i); }
  const std::vector<GeneratorWord>& generator_words() const { return generator_words_; }

  std::optional<std::size_t> find(const GMatrix& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const GMatrix& g) const { return index_.count(g) > 0; }

  std::size_t inverse_index(std::size_t i) const { return inverse_.at(i); }

  std::size_t multiply(std::size_t a, std::size_t b) const {
    auto it = index_.find(elements_[a] * elements_[b]);
    if (it == index_.end()) throw std::logic_error("group is not closed under multiplication");
    return it->second;
  }

  /// Index of a g a^-1.
  std::size_t conjugate(std::size_t a, std::size_t g) const {
    auto it = index_.find(elements_[a] * elements_[g] * elements_[inverse_[a]]);
    if (it == index_.end()) throw std::logic_error("group is not closed under conjugation");
    return it->second;
  }

  /// Every determinant is +1 or -1.
  bool admissible() const {
    const CycNum one(conductor(), 1), minus_one(conductor(), -1);
    for (const auto& g : elements_)
      if (!(g.det() == one) && !(g.det() == minus_one)) return false;
    return true;
  }

  bool contains_minus_identity() const {
    return contains(-GMatrix::identity(dimension(), conductor()));
  }

 private:
  std::vector<GMatrix> elements_;
  std::vector<GeneratorWord> words_;
  std::vector<GeneratorWord> generator_words_;
  std::unordered_map<GMatrix, std::size_t, GMatrixHash> index_;
  std::vector<std::size_t> inverse_;
};

inline constexpr std::size_t kDefaultClosureCap = 2048;

/// Breadth-first closure: each element is multiplied on the right by every
/// generator in turn; new elements are appended in discovery order.
inline FiniteMatrixGroup generate_closure(const std::vector<GMatrix>& generators,
                                          const std::vector<GeneratorWord>& labels = {},
                                          std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  const std::size_t n = generators[0].dim();
  const int cond = generators[0].conductor();
  for (const auto& g : generators) {
    if (g.dim() != n) throw ShapeMismatch("generators have different dimensions");
    if (g.conductor() != cond) throw ConductorMismatch("generators have different conductors");
  }
  std::vector<GeneratorWord> gen_words = labels;
  for (std::size_t i = gen_words.size(); i < generators.size(); ++i)
    gen_words.push_back(GeneratorWord::single("g" + std::to_string(i + 1)));

  std::vector<GMatrix> elements{GMatrix::identity(n, cond)};
  std::vector<GeneratorWord> words{GeneratorWord()};
  std::unordered_map<GMatrix, std::size_t, GMatrixHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      GMatrix next = elements[head] * generators[k];
      if (seen.count(next)) continue;
      if (elements.size() >= cap)
        throw GroupTooLarge("group closure exceeded " + std::to_string(cap) + " elements");
      seen.emplace(next, elements.size());
      words.push_back(words[head] * gen_words[k]);
      elements.push_back(std::move(next));
    }
  }
  return FiniteMatrixGroup(std::move(elements), std::move(words), std::move(gen_words));
}

struct ConjugacyClass {
  std::size_t representative;
  std::vector<std::size_t> members;  // ascending
};

struct ConjugacyData {
  std::vector<ConjugacyClass> classes;
  std::map<std::size_t, std::vector<std::size_t>> centralizers;  // keyed by representative
};

/// Orbits of the conjugation action; the representative of each class is
/// its smallest element index.
inline ConjugacyData conjugacy_classes(const FiniteMatrixGroup& G) {
  ConjugacyData out;
  std::vector<bool> assigned(G.order(), false);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (assigned[g]) continue;
    std::vector<bool> in_class(G.order(), false);
    std::vector<std::size_t> centralizer;
    for (std::size_t x = 0; x < G.order(); ++x) {
      const std::size_t y = G.conjugate(x, g);
      in_class[y] = true;
      if (y == g) centralizer.push_back(x);
    }
    ConjugacyClass cls{g, {}};
    for (std::size_t i = 0; i < G.order(); ++i)
      if (in_class[i]) {
        cls.members.push_back(i);
        assigned[i] = true;
      }
    out.centralizers.emplace(g, std::move(centralizer));
    out.classes.push_back(std::move(cls));
  }
  return out;
}

inline std::vector<std::size_t> centralizer(const FiniteMatrixGroup& G, std::size_t g) {
  std::vector<std::size_t> out;
  const GMatrix& m = G.element(g);
  for (std::size_t h = 0; h < G.order(); ++h)
    if (G.element(h) * m == m * G.element(h)) out.push_back(h);
  return out;
}

/// Basis (columns) of ker(g - id), read off the reduced row echelon form.
inline CycMatrix fixed_space(const GMatrix& g) {
  CycMatrix m = g.entries();
  for (std::size_t i = 0; i < g.dim(); ++i) m(i, i) -= CycNum(g.conductor(), 1);
  return kernel_basis(m);
}

inline std::size_t element_order(const GMatrix& g, std::size_t cap = kDefaultClosureCap) {
  GMatrix p = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  throw GroupTooLarge("element order exceeds " + std::to_string(cap));
}

inline CycNum det(const GMatrix& g) { return g.det(); }

struct HatExtension {
  FiniteMatrixGroup group;
  bool unchanged = false;  // -id was already present
};

/// {+g, -g : g in G}: the elements of G followed by their negatives.
inline HatExtension hat_extend(const FiniteMatrixGroup& G) {
  if (G.contains_minus_identity()) return {G, true};
  std::vector<GMatrix> elements = G.elements();
  std::vector<GeneratorWord> words;
  for (std::size_t i = 0; i < G.order(); ++i) words.push_back(G.word(i));
  const GeneratorWord minus = GeneratorWord::single("-I");
  for (std::size_t i = 0; i < G.order(); ++i) {
    elements.push_back(-G.element(i));
    words.push_back(minus * G.word(i));
  }
  std::vector<GeneratorWord> gens = G.generator_words();
  gens.push_back(minus);
  return {FiniteMatrixGroup(std::move(elements), std::move(words), std::move(gens)), false};
}

/// h G h^-1, keeping the element order of G.
inline FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& G, const GMatrix& h,
                                         const GeneratorWord& h_word = GeneratorWord::single("h")) {
  const GMatrix h_inv = h.inverse();
  std::vector<GMatrix> elements;
  std::vector<GeneratorWord> words;
  for (std::size_t i = 0; i < G.order(); ++i) {
    elements.push_back(h * G.element(i) * h_inv);
    words.push_back(i == 0 ? GeneratorWord() : h_word * G.word(i) * h_word.inverse());
  }
  std::vector<GeneratorWord> gens;
  for (const auto& w : G.generator_words()) gens.push_back(h_word * w * h_word.inverse());
  return FiniteMatrixGroup(std::move(elements), std::move(words), std::move(gens));
}

/// Some h in ambient with h G1 h^-1 = G2, by exhaustive search.
inline std::optional<GMatrix> groups_conjugate(const FiniteMatrixGroup& G1, const FiniteMatrixGroup& G2,
                                               const FiniteMatrixGroup& ambient) {
  if (G1.order() != G2.order()) return std::nullopt;
  for (const auto& h : ambient.elements()) {
    const GMatrix h_inv = h.inverse();
    bool ok = true;
    for (const auto& g : G1.elements()) {
      if (!G2.contains(h * g * h_inv)) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  return std::nullopt;
}

}  // namespace lgorb

#endif  // LGORB_MATGROUP_HPP_
