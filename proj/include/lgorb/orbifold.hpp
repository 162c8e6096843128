// The orbifold state space HH*(f, G): one sector Jac(f^g) xi_g per group
// element, the action of centralizers on sectors, and the assembly of the
// invariants over conjugacy class representatives.

#ifndef LGORB_ORBIFOLD_HPP_
#define LGORB_ORBIFOLD_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lgorb/jacobian.hpp"
#include "lgorb/linalg.hpp"
#include "lgorb/matgroup.hpp"
#include "lgorb/poly.hpp"

namespace lgorb {

struct InadmissibleGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASymmetry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCentralizing : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The g-th sector. fix_basis spans Fix(g) (kernel columns of g - id in
/// reduced echelon form); complement_basis lists the first standard basis
/// vectors completing it, and xi_g is the wedge of their images in
/// C^N / Fix(g) in ascending index order.
struct Sector {
  GMatrix g;
  CycMatrix fix_basis;
  CycMatrix complement_basis;
  std::vector<std::size_t> complement_indices;
  Poly restricted;
  JacobianAlgebra algebra;

  std::size_t fix_dim() const { return fix_basis.cols(); }
  std::size_t dim() const { return algebra.milnor(); }
};

namespace detail {

inline WeightSystem restricted_weights(const CycMatrix& fix_basis, const WeightSystem& w) {
  WeightSystem out{{}, w.total};
  for (std::size_t j = 0; j < fix_basis.cols(); ++j) {
    int weight = -1;
    for (std::size_t i = 0; i < fix_basis.rows(); ++i) {
      if (fix_basis(i, j).is_zero()) continue;
      if (weight >= 0 && weight != w.weights.at(i))
        throw NotQuasihomogeneous("fixed-locus coordinate mixes variables of different weights");
      weight = w.weights.at(i);
    }
    out.weights.push_back(weight);
  }
  return out;
}

}  // namespace detail

inline Sector build_sector(const Poly& f, const WeightSystem& w, const GMatrix& g) {
  if (g.dim() != f.arity()) throw ShapeMismatch("group element and polynomial dimensions differ");
  Sector s;
  s.g = g;
  s.fix_basis = fixed_space(g);
  const std::size_t n = g.dim();
  const int cond = g.conductor();
  std::vector<CycVector> cols;
  for (std::size_t j = 0; j < s.fix_basis.cols(); ++j) cols.push_back(column(s.fix_basis, j));
  std::vector<CycVector> complement;
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    CycVector e(n, CycNum(cond));
    e[i] = CycNum(cond, 1);
    cols.push_back(e);
    if (rank(from_columns(cols, n, cond)) == cols.size()) {
      complement.push_back(e);
      s.complement_indices.push_back(i);
    } else {
      cols.pop_back();
    }
  }
  s.complement_basis = from_columns(complement, n, cond);
  s.restricted = restrict_to_subspace(f, s.fix_basis);
  s.algebra = jacobian_algebra(s.restricted, detail::restricted_weights(s.fix_basis, w));
  return s;
}

/// The matrix A with h B = B A, where B = sector.fix_basis.
inline CycMatrix restriction_to_fix(const GMatrix& h, const Sector& sector) {
  if (!(h * sector.g == sector.g * h))
    throw NotCentralizing("element does not commute with the sector element");
  const CycMatrix hb = h.entries() * sector.fix_basis;
  const std::size_t k = sector.fix_dim();
  CycMatrix a = zero_matrix(k, k, h.conductor());
  for (std::size_t j = 0; j < k; ++j) {
    auto coords = solve_in_span(sector.fix_basis, column(hb, j));
    if (!coords) throw NotCentralizing("element does not preserve the fixed locus");
    for (std::size_t i = 0; i < k; ++i) a(i, j) = (*coords)[i];
  }
  return a;
}

inline CycNum restricted_determinant(const CycMatrix& a, int conductor) {
  return a.rows() == 0 ? CycNum(conductor, 1) : determinant(a);
}

/// rho_{h,g} = det(h) / det(h restricted to Fix(g)) for h centralizing g.
inline CycNum rho(const GMatrix& h, const Sector& sector) {
  return h.det() / restricted_determinant(restriction_to_fix(h, sector), h.conductor());
}

inline CycNum rho(const GMatrix& h, const GMatrix& g) {
  if (!(h * g == g * h)) throw NotCentralizing("rho is only defined here for commuting pairs");
  const CycMatrix fix = fixed_space(g);
  const CycMatrix hb = h.entries() * fix;
  const std::size_t k = fix.cols();
  CycMatrix a = zero_matrix(k, k, h.conductor());
  for (std::size_t j = 0; j < k; ++j) {
    auto coords = solve_in_span(fix, column(hb, j));
    for (std::size_t i = 0; i < k; ++i) a(i, j) = (*coords)[i];
  }
  return h.det() / restricted_determinant(a, h.conductor());
}

/// The polynomials m(M t) for every basis monomial m of the algebra, built
/// up one variable at a time (the standard monomials are closed under
/// division).
inline std::vector<Poly> basis_images(const JacobianAlgebra& J, const CycMatrix& m) {
  const std::size_t k = J.arity();
  const int cond = J.conductor();
  std::vector<Poly> forms;
  for (std::size_t i = 0; i < k; ++i) {
    Poly form(k, cond);
    for (std::size_t j = 0; j < k; ++j) form.add_term(Monomial::variable(k, j), m(i, j));
    forms.push_back(std::move(form));
  }
  std::vector<Poly> images;
  images.reserve(J.milnor());
  for (const Monomial& mono : J.basis()) {
    std::size_t var = k;
    for (std::size_t i = 0; i < k; ++i)
      if (mono[i] > 0) var = i;
    if (var == k) {
      images.push_back(Poly::constant(k, CycNum(cond, 1)));
      continue;
    }
    const std::size_t parent = *J.index_of(mono / Monomial::variable(k, var));
    images.push_back(images[parent] * forms[var]);
  }
  return images;
}

/// Matrix of h^* on Jac(f^g) xi_g in the standard-monomial basis:
/// [p] xi_g -> rho_{h,g} [p(h^-1 x)] xi_g.
inline CycMatrix sector_action(const GMatrix& h, const Sector& sector) {
  const CycMatrix a = restriction_to_fix(h, sector);
  const CycNum r = h.det() / restricted_determinant(a, h.conductor());
  const CycMatrix a_inv = *inverse(a);
  const JacobianAlgebra& J = sector.algebra;
  const std::vector<Poly> images = basis_images(J, a_inv);
  CycMatrix out = zero_matrix(J.milnor(), J.milnor(), h.conductor());
  for (std::size_t j = 0; j < images.size(); ++j) {
    const CycVector c = J.coordinates(images[j]);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out(i, j) = c[i] * r;
  }
  return out;
}

struct InvariantSpace {
  std::size_t dim = 0;
  std::vector<CycVector> basis;       // columns of the averaging operator
  std::vector<std::size_t> seeds;     // the basis indices those columns came from
  CycMatrix projector;                // (1/|H|) sum of the actions
};

inline InvariantSpace image_of_projector(CycMatrix projector) {
  InvariantSpace out;
  out.seeds = pivot_columns(projector);
  out.dim = out.seeds.size();
  for (auto j : out.seeds) out.basis.push_back(column(projector, j));
  out.projector = std::move(projector);
  return out;
}

/// Fixed subspace of a finite group given by the matrices of all its
/// elements, as the image of the Reynolds operator.
inline InvariantSpace invariant_subspace(const std::vector<CycMatrix>& actions) {
  if (actions.empty()) throw std::invalid_argument("invariant_subspace needs at least one matrix");
  CycMatrix sum = actions[0];
  for (std::size_t i = 1; i < actions.size(); ++i) {
    if (actions[i].rows() != sum.rows() || actions[i].cols() != sum.cols())
      throw ShapeMismatch("action matrices differ in size");
    sum = sum + actions[i];
  }
  const int cond = matrix_conductor(sum);
  return image_of_projector(
      scaled(sum, CycNum(cond, Rational(1, static_cast<long>(actions.size())))));
}

/// The same averaging operator as invariant_subspace over the sector
/// actions of `elements`, summing pulled-back polynomials before a single
/// reduction per basis monomial.
inline CycMatrix reynolds_operator(const Sector& sector, const std::vector<GMatrix>& elements) {
  const JacobianAlgebra& J = sector.algebra;
  const int cond = sector.g.conductor();
  std::vector<Poly> sums(J.milnor(), Poly(J.arity(), cond));
  for (const GMatrix& h : elements) {
    const CycMatrix a = restriction_to_fix(h, sector);
    const CycNum r = h.det() / restricted_determinant(a, h.conductor());
    const std::vector<Poly> images = basis_images(J, *inverse(a));
    for (std::size_t j = 0; j < images.size(); ++j) sums[j] += images[j].scaled(r);
  }
  const CycNum inv_order(cond, Rational(1, static_cast<long>(elements.size())));
  CycMatrix out = zero_matrix(J.milnor(), J.milnor(), cond);
  for (std::size_t j = 0; j < sums.size(); ++j) {
    const CycVector c = J.coordinates(sums[j]);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out(i, j) = c[i] * inv_order;
  }
  return out;
}

struct SectorReport {
  std::size_t representative = 0;
  std::string rep_word;
  CycMatrix rep_matrix;
  CycNum rep_det;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t fix_dim = 0;
  std::size_t sector_dim_raw = 0;
  std::size_t invariant_dim = 0;
  std::string restricted_poly;
  std::vector<std::string> invariant_basis;  // "[poly] xi"
  std::vector<int> invariant_graded_dims;     // by weighted degree on Fix(g)
};

struct HHReport {
  std::string group;
  std::size_t group_order = 0;
  std::vector<SectorReport> sectors;  // in class order; sectors[0] is the identity
  std::vector<int> identity_dimension_vector;
  std::size_t total_dim = 0;

  std::size_t identity_dim() const { return sectors.empty() ? 0 : sectors[0].invariant_dim; }
};

struct HHOptions {
  unsigned threads = 0;  // 0 or 1: sequential
  std::string descriptor = "G";
};

inline void check_symmetry_group(const Poly& f, const FiniteMatrixGroup& G) {
  if (!G.admissible())
    throw InadmissibleGroup("group has an element with determinant other than +1 or -1");
  for (std::size_t i = 0; i < G.order(); ++i)
    if (!(substitute_linear(f, G.element(i).entries()) == f))
      throw NotASymmetry("element " + G.word(i).to_string() + " is not a symmetry of f");
}

inline SectorReport compute_sector_report(const Poly& f, const WeightSystem& w, const FiniteMatrixGroup& G,
                                          const ConjugacyClass& cls,
                                          const std::vector<std::size_t>& centralizer_indices) {
  const GMatrix& g = G.element(cls.representative);
  const Sector sector = build_sector(f, w, g);
  std::vector<GMatrix> z;
  for (auto i : centralizer_indices) z.push_back(G.element(i));
  const InvariantSpace inv = image_of_projector(reynolds_operator(sector, z));

  SectorReport rep;
  rep.representative = cls.representative;
  rep.rep_word = G.word(cls.representative).to_string();
  rep.rep_matrix = g.entries();
  rep.rep_det = g.det();
  rep.class_size = cls.members.size();
  rep.centralizer_order = centralizer_indices.size();
  rep.fix_dim = sector.fix_dim();
  rep.sector_dim_raw = sector.dim();
  rep.invariant_dim = inv.dim;
  rep.restricted_poly = sector.restricted.to_string(sector.fix_dim() == g.dim() ? "x" : "t");
  const JacobianAlgebra& J = sector.algebra;
  rep.invariant_graded_dims.assign(J.graded_dims().size(), 0);
  const std::string var = sector.fix_dim() == g.dim() ? "x" : "t";
  const std::string xi = cls.representative == 0 ? "xi_id" : "xi_g";
  for (std::size_t k = 0; k < inv.basis.size(); ++k) {
    ++rep.invariant_graded_dims[J.basis_degree(inv.seeds[k])];
    rep.invariant_basis.push_back("[" + J.from_coordinates(inv.basis[k]).to_string(var) + "] " + xi);
  }
  return rep;
}

/// HH*(f, G) as the sum over conjugacy class representatives g of the
/// Z(g)-invariants of the g-th sector.
inline HHReport compute_hh(const Poly& f, const WeightSystem& w, const FiniteMatrixGroup& G,
                           const HHOptions& options = {}) {
  if (G.dimension() != f.arity()) throw ShapeMismatch("group dimension differs from polynomial arity");
  if (G.conductor() != f.conductor()) throw ConductorMismatch("group and polynomial conductors differ");
  check_symmetry_group(f, G);
  const ConjugacyData conj = conjugacy_classes(G);

  HHReport report;
  report.group = options.descriptor;
  report.group_order = G.order();
  report.sectors.resize(conj.classes.size());
  auto work = [&](std::size_t c) {
    const ConjugacyClass& cls = conj.classes[c];
    report.sectors[c] = compute_sector_report(f, w, G, cls, conj.centralizers.at(cls.representative));
  };
  const unsigned threads = std::min<unsigned>(options.threads, static_cast<unsigned>(conj.classes.size()));
  if (threads <= 1) {
    for (std::size_t c = 0; c < conj.classes.size(); ++c) work(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t c = next++; c < conj.classes.size(); c = next++) work(c);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (const auto& s : report.sectors) report.total_dim += s.invariant_dim;
  report.identity_dimension_vector = report.sectors.at(0).invariant_graded_dims;
  return report;
}

struct ProductTable {
  std::vector<std::string> labels;          // seed monomial of each basis element
  std::vector<CycVector> basis;             // invariant classes, in Jac(f) coordinates
  // products[i][j] = coordinates of basis[i] * basis[j] over `basis`
  std::vector<std::vector<CycVector>> products;
};

/// Multiplication table of (Jac f)^G on the basis of averaged seed
/// monomials. With no seeds given, the pivot monomials of the averaging
/// operator are used.
inline ProductTable identity_sector_products(const Poly& f, const WeightSystem& w, const FiniteMatrixGroup& G,
                                             const std::vector<Monomial>& seeds = {}) {
  check_symmetry_group(f, G);
  const Sector sector = build_sector(f, w, G.element(0));
  const InvariantSpace inv = image_of_projector(reynolds_operator(sector, G.elements()));
  const JacobianAlgebra& J = sector.algebra;
  const int cond = f.conductor();

  ProductTable table;
  if (seeds.empty()) {
    table.basis = inv.basis;
    for (auto j : inv.seeds) table.labels.push_back(J.basis()[j].to_string());
  } else {
    for (const Monomial& m : seeds) {
      const CycVector c = J.coordinates(Poly::monomial(m, CycNum(cond, 1)));
      table.basis.push_back(inv.projector * c);
      table.labels.push_back(m.to_string());
    }
    if (rank(from_columns(table.basis, J.milnor(), cond)) != inv.dim || table.basis.size() != inv.dim)
      throw std::invalid_argument("seed monomials do not average to a basis of the invariants");
  }
  const CycMatrix basis_matrix = from_columns(table.basis, J.milnor(), cond);
  std::vector<Poly> polys;
  for (const auto& v : table.basis) polys.push_back(J.from_coordinates(v));
  table.products.assign(polys.size(), std::vector<CycVector>(polys.size()));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i; j < polys.size(); ++j) {
      auto coords = solve_in_span(basis_matrix, J.coordinates(polys[i] * polys[j]));
      if (!coords) throw std::logic_error("product of invariants left the invariant subspace");
      table.products[i][j] = *coords;
      table.products[j][i] = *coords;
    }
  return table;
}

inline int surface_cohomology_dim(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  return 2 + 2 * genus;
}

}  // namespace lgorb

#endif  // LGORB_ORBIFOLD_HPP_
