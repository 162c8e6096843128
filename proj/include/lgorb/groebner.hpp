// Buchberger's algorithm over CycNum in graded reverse lexicographic order.

#ifndef LGORB_GROEBNER_HPP_
#define LGORB_GROEBNER_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/poly.hpp"

namespace lgorb {

struct InfiniteQuotient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coeff().inverse());
}

/// Reduced, monic Groebner basis, sorted by leading monomial (ascending).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t arity, int conductor, std::vector<Poly> generators)
      : arity_(arity), conductor_(conductor), generators_(std::move(generators)) {}

  std::size_t arity() const { return arity_; }
  int conductor() const { return conductor_; }
  const std::vector<Poly>& generators() const { return generators_; }
  std::string order() const { return "grevlex"; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : generators_) out.push_back(g.leading_monomial());
    return out;
  }

 private:
  std::size_t arity_ = 0;
  int conductor_ = 1;
  std::vector<Poly> generators_;
};

namespace detail {

inline const Poly* find_reducer(const std::vector<Poly>& basis, const Monomial& m,
                                std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip) continue;
    if (basis[i].leading_monomial().divides(m)) return &basis[i];
  }
  return nullptr;
}

/// Full reduction of p by a list of monic polynomials.
inline Poly reduce(Poly p, const std::vector<Poly>& basis,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly remainder(p.arity(), p.conductor());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const CycNum lc = p.leading_coeff();
    if (const Poly* g = find_reducer(basis, lm, skip)) {
      p -= g->times_monomial(lm / g->leading_monomial(), lc);
    } else {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const CycNum one(f.conductor(), 1);
  return f.times_monomial(l / f.leading_monomial(), one) -
         g.times_monomial(l / g.leading_monomial(), one);
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. Generators are made monic on insertion.
inline GroebnerBasis buchberger(const std::vector<Poly>& generators, std::size_t arity,
                                int conductor) {
  std::vector<Poly> basis;
  for (const auto& g : generators) {
    if (g.arity() != arity || g.conductor() != conductor)
      throw ShapeMismatch("generator is not in the common ring");
    Poly r = detail::reduce(g, basis);
    if (!r.is_zero()) basis.push_back(make_monic(r));
  }

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (!(a.lcm == b.lcm)) return grevlex_greater(b.lcm, a.lcm);
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> live;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Pair p{Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j};
      pairs.insert(p);
      live.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto is_live = [&](std::size_t a, std::size_t b) {
    return live.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    live.erase({p.i, p.j});
    const Monomial& li = basis[p.i].leading_monomial();
    const Monomial& lj = basis[p.j].leading_monomial();
    if (Monomial::coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].leading_monomial().divides(p.lcm) && !is_live(p.i, k) && !is_live(p.j, k))
        chain = true;
    }
    if (chain) continue;
    Poly s = detail::reduce(detail::s_polynomial(basis[p.i], basis[p.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(make_monic(s));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].leading_monomial();
      const Monomial& lm = basis[i].leading_monomial();
      if (lk.divides(lm) && (!(lk == lm) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Monomial lm = minimal[i].leading_monomial();
    Poly tail = minimal[i];
    tail.add_term(lm, -tail.leading_coeff());
    Poly r = detail::reduce(tail, minimal, i);
    r.add_term(lm, CycNum(conductor, 1));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return grevlex_greater(b.leading_monomial(), a.leading_monomial());
  });
  return GroebnerBasis(arity, conductor, std::move(reduced));
}

inline GroebnerBasis buchberger(const std::vector<Poly>& generators) {
  if (generators.empty()) throw std::invalid_argument("buchberger: no generators and no ring");
  return buchberger(generators, generators[0].arity(), generators[0].conductor());
}

inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (p.arity() != gb.arity() || p.conductor() != gb.conductor())
    throw ShapeMismatch("normal_form: polynomial is not in the basis ring");
  return detail::reduce(p, gb.generators());
}

/// Standard monomials, ascending in grevlex (hence by degree).
inline std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
  const std::size_t n = gb.arity();
  const std::vector<Monomial> leads = gb.leading_monomials();
  std::vector<int> bound(n, -1);
  for (const auto& lm : leads) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
    if (support == 0) return {};  // unit ideal
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw InfiniteQuotient("quotient is infinite-dimensional: no pure power of x" +
                             std::to_string(i + 1) + " among leading monomials");
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      Monomial m(e);
      for (const auto& lm : leads)
        if (lm.divides(m)) return;
      out.push_back(std::move(m));
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      e[i] = k;
      walk(i + 1);
    }
    e[i] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
  return out;
}

}  // namespace lgorb

#endif  // LGORB_GROEBNER_HPP_
