// JSON, CSV and text encodings of numbers, polynomials, algebras, groups
// and HH reports. CycNum values are always written exactly.

#ifndef LGORB_SERIALIZE_HPP_
#define LGORB_SERIALIZE_HPP_

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgorb/catalog.hpp"
#include "lgorb/cycnum.hpp"
#include "lgorb/jacobian.hpp"
#include "lgorb/matgroup.hpp"
#include "lgorb/orbifold.hpp"
#include "lgorb/poly.hpp"
#include "lgorb/word.hpp"

namespace lgorb {

using json = nlohmann::json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- CycNum -------------------------------------------------------------

inline json to_json(const CycNum& a) {
  json coeffs = json::array();
  for (const Rational& c : a.coeffs())
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

inline Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return make_rational(Integer(j.get<std::string>()), Integer(1));
    if (j.is_array() && j.size() == 2) {
      auto part = [](const json& x) {
        return x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>());
      };
      const Integer den = part(j[1]);
      if (den == 0) throw FormatError("zero denominator in rational");
      return make_rational(part(j[0]), den);
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed rational: ") + e.what());
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed rational: ") + e.what());
  }
  throw FormatError("rational must be an integer, a decimal string or a [num, den] pair");
}

inline CycNum cycnum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw FormatError("CycNum needs \"conductor\" and \"coeffs\"");
  const int n = j.at("conductor").get<int>();
  if (n <= 0) throw FormatError("conductor must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  if (static_cast<int>(coeffs.size()) > euler_phi(n))
    throw FormatError("more coefficients than the degree of the field");
  coeffs.resize(euler_phi(n), Rational(0));
  return CycNum::from_coeffs(n, coeffs);
}

// ---- Poly ---------------------------------------------------------------

inline json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exponents", m.exponents()}, {"coeff", to_json(c)}});
  return out;
}

inline Poly poly_from_json(const json& j, std::size_t arity, int conductor) {
  Poly p(arity, conductor);
  for (const auto& t : j) {
    auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != arity) throw FormatError("monomial arity mismatch");
    p.add_term(Monomial(e), cycnum_from_json(t.at("coeff")).lifted(conductor));
  }
  return p;
}

// ---- matrices and groups ------------------------------------------------

inline json to_json(const CycMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline CycMatrix matrix_from_json(const json& j, int conductor) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  CycMatrix m = zero_matrix(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw FormatError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const CycNum a = cycnum_from_json(j[i][k]);
      if (conductor % a.conductor() != 0)
        throw FormatError("entry conductor " + std::to_string(a.conductor()) + " does not divide " +
                          std::to_string(conductor));
      m(i, k) = a.lifted(conductor);
    }
  }
  return m;
}

inline json to_json(const FiniteMatrixGroup& G) {
  json mats = json::array(), words = json::array();
  for (std::size_t i = 0; i < G.order(); ++i) {
    mats.push_back(to_json(G.element(i).entries()));
    words.push_back(G.word(i).to_string());
  }
  return {{"conductor", G.conductor()}, {"order", G.order()}, {"matrices", mats}, {"words", words}};
}

inline json to_json(const JacobianAlgebra& J) {
  json basis = json::array();
  for (const auto& m : J.basis()) basis.push_back(m.to_string());
  json hess = json::array();
  for (const auto& c : J.hessian_class()) hess.push_back(to_json(c));
  return {{"basis", basis}, {"graded_dims", J.graded_dims()}, {"milnor", J.milnor()}, {"hessian_class", hess}};
}

/// A group input file: {"conductor": n, "words": [...]} or
/// {"conductor": n, "matrices": [...], "words"?: [...]}, optionally "hat".
struct GroupInput {
  int conductor = kKleinConductor;
  std::vector<GMatrix> generators;
  std::vector<GeneratorWord> labels;
  bool hat = false;
};

inline GroupInput group_input_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("group file must be a JSON object");
  GroupInput in;
  if (j.contains("conductor")) in.conductor = j.at("conductor").get<int>();
  if (in.conductor <= 0) throw FormatError("conductor must be positive");
  if (j.contains("hat")) in.hat = j.at("hat").get<bool>();
  std::vector<std::string> words;
  if (j.contains("words")) words = j.at("words").get<std::vector<std::string>>();
  if (j.contains("matrices")) {
    const json& mats = j.at("matrices");
    if (!mats.is_array() || mats.empty()) throw FormatError("\"matrices\" must be a non-empty array");
    for (std::size_t k = 0; k < mats.size(); ++k) {
      CycMatrix m = matrix_from_json(mats[k], in.conductor);
      if (!in.generators.empty() && m.rows() != in.generators[0].dim())
        throw FormatError("matrices have different sizes");
      if (determinant(m).is_zero()) throw FormatError("matrix " + std::to_string(k) + " is singular");
      in.generators.emplace_back(std::move(m));
      in.labels.push_back(GeneratorWord::single(k < words.size() ? words[k] : "g" + std::to_string(k + 1)));
    }
  } else {
    if (words.empty()) throw FormatError("group file needs \"words\" or \"matrices\"");
    if (in.conductor % kKleinConductor != 0)
      throw FormatError("generator words need a conductor divisible by " + std::to_string(kKleinConductor));
    for (const auto& w : words) {
      GeneratorWord word = parse_word(w);
      GMatrix m = evaluate_word(word);
      in.generators.push_back(m.lifted(in.conductor));
      in.labels.push_back(word);
    }
  }
  return in;
}

// ---- HH reports ---------------------------------------------------------

inline json to_json(const SectorReport& s) {
  return {{"representative", s.representative},
          {"rep_word", s.rep_word},
          {"rep_matrix", to_json(s.rep_matrix)},
          {"rep_det", to_json(s.rep_det)},
          {"class_size", s.class_size},
          {"centralizer_order", s.centralizer_order},
          {"fix_dim", s.fix_dim},
          {"sector_dim_raw", s.sector_dim_raw},
          {"invariant_dim", s.invariant_dim},
          {"restricted_poly", s.restricted_poly},
          {"invariant_basis", s.invariant_basis},
          {"invariant_graded_dims", s.invariant_graded_dims}};
}

inline json to_json(const HHReport& r) {
  json sectors = json::array();
  for (const auto& s : r.sectors) sectors.push_back(to_json(s));
  return {{"group", r.group},
          {"group_order", r.group_order},
          {"sectors", sectors},
          {"identity_dimension_vector", r.identity_dimension_vector},
          {"total_dim", r.total_dim}};
}

inline SectorReport sector_report_from_json(const json& j, int conductor) {
  SectorReport s;
  s.representative = j.at("representative").get<std::size_t>();
  s.rep_word = j.at("rep_word").get<std::string>();
  s.rep_matrix = matrix_from_json(j.at("rep_matrix"), conductor);
  s.rep_det = cycnum_from_json(j.at("rep_det")).lifted(conductor);
  s.class_size = j.at("class_size").get<std::size_t>();
  s.centralizer_order = j.at("centralizer_order").get<std::size_t>();
  s.fix_dim = j.at("fix_dim").get<std::size_t>();
  s.sector_dim_raw = j.at("sector_dim_raw").get<std::size_t>();
  s.invariant_dim = j.at("invariant_dim").get<std::size_t>();
  s.restricted_poly = j.at("restricted_poly").get<std::string>();
  s.invariant_basis = j.at("invariant_basis").get<std::vector<std::string>>();
  s.invariant_graded_dims = j.at("invariant_graded_dims").get<std::vector<int>>();
  return s;
}

inline HHReport hh_report_from_json(const json& j) {
  try {
    HHReport r;
    r.group = j.at("group").get<std::string>();
    r.group_order = j.at("group_order").get<std::size_t>();
    for (const auto& s : j.at("sectors")) {
      const int cond = s.at("rep_det").at("conductor").get<int>();
      r.sectors.push_back(sector_report_from_json(s, cond));
    }
    r.identity_dimension_vector = j.at("identity_dimension_vector").get<std::vector<int>>();
    r.total_dim = j.at("total_dim").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

inline bool operator==(const SectorReport& a, const SectorReport& b) {
  return a.representative == b.representative && a.rep_word == b.rep_word && a.rep_matrix == b.rep_matrix &&
         a.rep_det == b.rep_det && a.class_size == b.class_size && a.centralizer_order == b.centralizer_order &&
         a.fix_dim == b.fix_dim && a.sector_dim_raw == b.sector_dim_raw && a.invariant_dim == b.invariant_dim &&
         a.restricted_poly == b.restricted_poly && a.invariant_basis == b.invariant_basis &&
         a.invariant_graded_dims == b.invariant_graded_dims;
}

inline bool operator==(const HHReport& a, const HHReport& b) {
  return a.group == b.group && a.group_order == b.group_order && a.sectors == b.sectors &&
         a.identity_dimension_vector == b.identity_dimension_vector && a.total_dim == b.total_dim;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace detail

/// One row per conjugacy class, then a summary row.
inline std::string to_csv(const HHReport& r) {
  std::ostringstream os;
  os << "group,row,rep_word,class_size,centralizer_order,fix_dim,sector_dim_raw,invariant_dim,graded_dims\n";
  for (std::size_t i = 0; i < r.sectors.size(); ++i) {
    const auto& s = r.sectors[i];
    os << detail::csv_field(r.group) << ",class," << detail::csv_field(s.rep_word) << ',' << s.class_size << ','
       << s.centralizer_order << ',' << s.fix_dim << ',' << s.sector_dim_raw << ',' << s.invariant_dim << ','
       << detail::join_ints(s.invariant_graded_dims, " ") << '\n';
  }
  os << detail::csv_field(r.group) << ",total,," << r.group_order << ",,,," << r.total_dim << ','
     << detail::join_ints(r.identity_dimension_vector, " ") << '\n';
  return os.str();
}

inline std::string to_text(const HHReport& r) {
  std::ostringstream os;
  os << "HH*(f, G) for G = " << r.group << ", |G| = " << r.group_order << ", " << r.sectors.size()
     << " conjugacy classes\n\n";
  for (const auto& s : r.sectors) {
    os << "class of " << s.rep_word << ": size " << s.class_size << ", |Z(g)| = " << s.centralizer_order
       << ", det = " << s.rep_det.to_string() << ", N_g = " << s.fix_dim << "\n";
    os << "  f^g = " << s.restricted_poly << "\n";
    os << "  dim Jac(f^g) = " << s.sector_dim_raw << ", invariants = " << s.invariant_dim << "\n";
    for (const auto& b : s.invariant_basis) os << "    " << b << "\n";
  }
  os << "\nidentity dimension vector: (" << detail::join_ints(r.identity_dimension_vector, ",") << ")\n";
  os << "total dimension: " << r.total_dim << "\n";
  return os.str();
}

}  // namespace lgorb

#endif  // LGORB_SERIALIZE_HPP_
