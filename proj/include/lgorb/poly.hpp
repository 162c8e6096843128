// Multivariate polynomials over CycNum with a fixed number of variables.
//
// Terms are kept in a map ordered by graded reverse lexicographic order with
// x1 > x2 > ... > xN, largest first, so begin() is the leading term and two
// polynomials are equal iff their term maps are.

#ifndef LGORB_POLY_HPP_
#define LGORB_POLY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/cycnum.hpp"
#include "lgorb/linalg.hpp"

namespace lgorb {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<int> exps) : exps_(exps) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }

  static Monomial variable(std::size_t arity, std::size_t i) {
    Monomial m(arity);
    m.exps_.at(i) = 1;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  int weighted_degree(const std::vector<int>& weights) const {
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * weights.at(i);
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
    return out;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
      out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  /// "x1^2*x3", or "1" for the unit monomial.
  std::string to_string(const std::string& var = "x") const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += var + std::to_string(i + 1);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<int> exps_;
};

/// Strict "a is larger than b" in graded reverse lexicographic order.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

struct WeightSystem {
  std::vector<int> weights;
  int total = 0;

  static WeightSystem uniform(std::size_t arity, int total) {
    return WeightSystem{std::vector<int>(arity, 1), total};
  }
};

class Poly {
 public:
  using Terms = std::map<Monomial, CycNum, GrevlexDescending>;

  Poly() : Poly(0, 1) {}
  Poly(std::size_t arity, int conductor) : arity_(arity), conductor_(conductor) {}

  static Poly constant(std::size_t arity, const CycNum& c) {
    Poly p(arity, c.conductor());
    p.add_term(Monomial(arity), c);
    return p;
  }

  static Poly variable(std::size_t arity, std::size_t i, int conductor) {
    Poly p(arity, conductor);
    p.add_term(Monomial::variable(arity, i), CycNum(conductor, 1));
    return p;
  }

  static Poly monomial(const Monomial& m, const CycNum& c) {
    Poly p(m.arity(), c.conductor());
    p.add_term(m, c);
    return p;
  }

  std::size_t arity() const { return arity_; }
  int conductor() const { return conductor_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const CycNum& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  CycNum coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNum(conductor_) : it->second;
  }

  void add_term(const Monomial& m, const CycNum& c) {
    if (m.arity() != arity_) throw ShapeMismatch("monomial arity does not match ring");
    if (c.conductor() != conductor_) throw ConductorMismatch("term conductor does not match ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree of the largest term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Poly lifted(int conductor) const {
    Poly out(arity_, conductor);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.lifted(conductor));
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }

  Poly& operator+=(const Poly& b) {
    check_ring(b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& b) {
    check_ring(b);
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return scaled(CycNum(conductor_, -1)); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly out(a.arity_, a.conductor_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const CycNum& s) const {
    Poly out(arity_, conductor_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  Poly times_monomial(const Monomial& m, const CycNum& s) const {
    Poly out(arity_, conductor_);
    if (s.is_zero()) return out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c * s);
    return out;
  }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly out = constant(arity_, CycNum(conductor_, 1));
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  std::string to_string(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      const bool unit_monomial = m.degree() == 0;
      bool neg = false;
      if (c.is_rational()) {
        neg = c.rational_value() < 0;
        if (neg) cs = (-c).to_string();
      } else {
        cs = "(" + cs + ")";
      }
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (unit_monomial) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += m.to_string(var);
      }
    }
    return out;
  }

 private:
  void check_ring(const Poly& b) const {
    if (b.arity_ != arity_) throw ShapeMismatch("polynomial arity mismatch");
    if (b.conductor_ != conductor_) throw ConductorMismatch("polynomial conductor mismatch");
  }

  std::size_t arity_;
  int conductor_;
  Terms terms_;
};

inline Poly partial_derivative(const Poly& p, std::size_t i) {
  if (i >= p.arity())
    throw std::out_of_range("partial derivative index " + std::to_string(i + 1) + " out of range");
  Poly out(p.arity(), p.conductor());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    std::vector<int> e = m.exponents();
    const long k = e[i];
    --e[i];
    out.add_term(Monomial(std::move(e)), c.scaled(Rational(k)));
  }
  return out;
}

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along the first row.
inline Poly poly_determinant(const Matrix<Poly>& m, std::size_t arity, int conductor) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(arity, CycNum(conductor, 1));
  if (n == 1) return m(0, 0);
  Poly out(arity, conductor);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<Poly> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Poly term = m(0, j) * poly_determinant(minor, arity, conductor);
    if (j % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

inline Poly hessian(const Poly& p) {
  const std::size_t n = p.arity();
  Matrix<Poly> second(n, n);
  std::vector<Poly> first;
  for (std::size_t i = 0; i < n; ++i) first.push_back(partial_derivative(p, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) second(i, j) = partial_derivative(first[i], j);
  return poly_determinant(second, n, p.conductor());
}

/// p(M y) for an N x k matrix M: variable x_i becomes sum_j M(i,j) y_j.
/// The result has arity k. Powers of each linear form are cached.
inline Poly substitute_linear_forms(const Poly& p, const CycMatrix& m) {
  if (m.rows() != p.arity())
    throw ShapeMismatch("substitution matrix has " + std::to_string(m.rows()) + " rows, ring has " +
                        std::to_string(p.arity()) + " variables");
  const std::size_t k = m.cols();
  const int cond = p.conductor();
  if (!m.data().empty() && matrix_conductor(m) != cond)
    throw ConductorMismatch("substitution matrix conductor does not match polynomial");
  std::vector<Poly> forms;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    Poly form(k, cond);
    for (std::size_t j = 0; j < k; ++j) form.add_term(Monomial::variable(k, j), m(i, j));
    forms.push_back(std::move(form));
  }
  std::vector<std::vector<Poly>> powers(p.arity());
  auto power_of = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(k, CycNum(cond, 1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * forms[i]);
    return cache[e];
  };
  Poly out(k, cond);
  for (const auto& [mono, c] : p.terms()) {
    Poly term = Poly::constant(k, c);
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (mono[i] > 0) term = term * power_of(i, mono[i]);
    out += term;
  }
  return out;
}

/// p(M x) for a square matrix M.
inline Poly substitute_linear(const Poly& p, const CycMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("substitute_linear needs a square matrix");
  return substitute_linear_forms(p, m);
}

inline bool is_quasihomogeneous(const Poly& p, const WeightSystem& w) {
  if (w.weights.size() != p.arity()) return false;
  for (const auto& [m, c] : p.terms())
    if (m.weighted_degree(w.weights) != w.total) return false;
  return true;
}

struct DependentColumns : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// p(B t) in the coordinates t of the column span of B.
inline Poly restrict_to_subspace(const Poly& p, const CycMatrix& basis) {
  if (basis.cols() > 0 && rank(basis) != basis.cols())
    throw DependentColumns("subspace basis columns are linearly dependent");
  if (basis.cols() == 0) {
    // p(0): the constant term, as an arity-0 polynomial.
    return Poly::constant(0, p.coeff(Monomial(p.arity())));
  }
  return substitute_linear_forms(p, basis);
}

}  // namespace lgorb

#endif  // LGORB_POLY_HPP_
