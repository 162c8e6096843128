// Jacobian algebras of quasihomogeneous isolated singularities, their
// graded dimensions, Hessian class and residue pairing.

#ifndef LGORB_JACOBIAN_HPP_
#define LGORB_JACOBIAN_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/groebner.hpp"
#include "lgorb/poly.hpp"

namespace lgorb {

class JacobianAlgebra {
 public:
  const Poly& source() const { return source_; }
  const WeightSystem& weights() const { return weights_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<int>& graded_dims() const { return graded_dims_; }
  std::size_t milnor() const { return basis_.size(); }
  const CycVector& hessian_class() const { return hessian_class_; }
  std::size_t arity() const { return source_.arity(); }
  int conductor() const { return source_.conductor(); }

  /// Weighted degree of the top graded piece.
  int socle_degree() const { return static_cast<int>(graded_dims_.size()) - 1; }

  int basis_degree(std::size_t i) const { return basis_.at(i).weighted_degree(weights_.weights); }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Coordinates of the class of p over basis().
  CycVector coordinates(const Poly& p) const {
    if (p.arity() != arity() || p.conductor() != conductor())
      throw ShapeMismatch("coordinates: polynomial is not in the algebra's ring");
    CycVector out(milnor(), CycNum(conductor()));
    for (const auto& [m, c] : p.terms()) {
      auto it = reductions_.find(m);
      if (it == reductions_.end()) {
        if (m.weighted_degree(weights_.weights) > socle_degree()) continue;
        const CycVector v = coordinates_by_reduction(Poly::monomial(m, CycNum(conductor(), 1)));
        add_scaled(out, v, c);
        continue;
      }
      add_scaled(out, it->second, c);
    }
    return out;
  }

  Poly from_coordinates(const CycVector& v) const {
    Poly p(arity(), conductor());
    for (std::size_t i = 0; i < basis_.size(); ++i) p.add_term(basis_[i], v.at(i));
    return p;
  }

  Poly normal_form(const Poly& p) const { return from_coordinates(coordinates(p)); }

  friend JacobianAlgebra jacobian_algebra(const Poly& f, const WeightSystem& w);

 private:
  static void add_scaled(CycVector& out, const CycVector& v, const CycNum& c) {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!v[i].is_zero()) out[i] += v[i] * c;
  }

  CycVector coordinates_by_reduction(const Poly& p) const {
    const Poly r = lgorb::normal_form(p, gb_);
    CycVector out(milnor(), CycNum(conductor()));
    for (const auto& [m, c] : r.terms()) out[index_.at(m)] = c;
    return out;
  }

  Poly source_;
  WeightSystem weights_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<int> graded_dims_;
  CycVector hessian_class_;
  // normal forms of every monomial up to the socle degree
  std::map<Monomial, CycVector> reductions_;
};

struct NotQuasihomogeneous : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline JacobianAlgebra jacobian_algebra(const Poly& f, const WeightSystem& w) {
  if (!is_quasihomogeneous(f, w))
    throw NotQuasihomogeneous("polynomial is not quasihomogeneous for the given weights");
  for (int d : w.weights)
    if (d <= 0) throw std::invalid_argument("weights must be positive");
  JacobianAlgebra J;
  J.source_ = f;
  J.weights_ = w;
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.arity(); ++i) partials.push_back(partial_derivative(f, i));
  J.gb_ = buchberger(partials, f.arity(), f.conductor());
  J.basis_ = quotient_basis(J.gb_);
  if (J.basis_.empty()) throw InfiniteQuotient("Jacobian ideal is the unit ideal");
  int top = 0;
  for (std::size_t i = 0; i < J.basis_.size(); ++i) {
    J.index_.emplace(J.basis_[i], i);
    top = std::max(top, J.basis_[i].weighted_degree(w.weights));
  }
  J.graded_dims_.assign(top + 1, 0);
  for (const auto& m : J.basis_) ++J.graded_dims_[m.weighted_degree(w.weights)];

  // Reduce every monomial of weighted degree <= top once.
  const std::size_t n = f.arity();
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == n) {
      Monomial m(e);
      J.reductions_.emplace(m, J.coordinates_by_reduction(Poly::monomial(m, CycNum(f.conductor(), 1))));
      return;
    }
    for (int k = 0; k * w.weights[i] <= budget; ++k) {
      e[i] = k;
      walk(i + 1, budget - k * w.weights[i]);
    }
    e[i] = 0;
  };
  walk(0, top);

  J.hessian_class_ = J.coordinates(hessian(f));
  bool nonzero = false;
  for (const auto& c : J.hessian_class_) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw std::logic_error("Hessian class vanishes in the Jacobian algebra");
  return J;
}

struct DegenerateSocle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// eta(u, v): the top-degree coordinate of [u v], normalised so that
/// eta(1, hess) = 1.
inline CycNum residue_pairing(const Poly& u, const Poly& v, const JacobianAlgebra& J) {
  if (J.graded_dims().back() != 1)
    throw DegenerateSocle("top graded piece of the Jacobian algebra is not one-dimensional");
  std::size_t top = 0;
  while (J.basis_degree(top) != J.socle_degree()) ++top;
  const CycNum& h = J.hessian_class()[top];
  if (h.is_zero()) throw DegenerateSocle("Hessian class has no top-degree component");
  return J.coordinates(u * v)[top] / h;
}

}  // namespace lgorb

#endif  // LGORB_JACOBIAN_HPP_
