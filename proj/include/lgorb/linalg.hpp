// Dense exact linear algebra over CycNum: products, echelon forms, kernels,
// rank and determinants.

#ifndef LGORB_LINALG_HPP_
#define LGORB_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/cycnum.hpp"

namespace lgorb {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CycMatrix = Matrix<CycNum>;
using CycVector = std::vector<CycNum>;

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline CycMatrix zero_matrix(std::size_t rows, std::size_t cols, int conductor) {
  return CycMatrix(rows, cols, CycNum(conductor));
}

inline CycMatrix identity_matrix(std::size_t n, int conductor) {
  CycMatrix m = zero_matrix(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(conductor, 1);
  return m;
}

inline int matrix_conductor(const CycMatrix& m) {
  return m.data().empty() ? 1 : m(0, 0).conductor();
}

inline CycMatrix lift_matrix(const CycMatrix& m, int conductor) {
  CycMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).lifted(conductor);
  return out;
}

inline CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product: " + std::to_string(a.cols()) + " columns vs " +
                        std::to_string(b.rows()) + " rows");
  const int cond = a.data().empty() ? matrix_conductor(b) : matrix_conductor(a);
  CycMatrix out = zero_matrix(a.rows(), b.cols(), cond);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const CycNum& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  return out;
}

inline CycVector operator*(const CycMatrix& a, const CycVector& v) {
  if (a.cols() != v.size()) throw ShapeMismatch("matrix-vector product shape");
  CycVector out(a.rows(), CycNum(v.empty() ? matrix_conductor(a) : v[0].conductor()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

inline CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum shape");
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline CycMatrix scaled(const CycMatrix& a, const CycNum& s) {
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!out(i, j).is_zero()) out(i, j) = out(i, j) * s;
  return out;
}

inline CycMatrix transpose(const CycMatrix& a) {
  CycMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline CycVector column(const CycMatrix& a, std::size_t j) {
  CycVector out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
  return out;
}

inline CycMatrix from_columns(const std::vector<CycVector>& cols, std::size_t rows, int conductor) {
  CycMatrix out = zero_matrix(rows, cols.size(), conductor);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j].at(i);
  return out;
}

struct Echelon {
  CycMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivot is the first nonzero entry in each column.
inline Echelon rref(CycMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    const CycNum inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycNum factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

/// Kernel basis as columns: one vector per free column, with 1 in that
/// coordinate and minus the echelon entries in the pivot coordinates.
inline CycMatrix kernel_basis(const CycMatrix& m) {
  const int cond = matrix_conductor(m);
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<CycVector> cols;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v(m.cols(), CycNum(cond));
    v[free] = CycNum(cond, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  return from_columns(cols, m.cols(), cond);
}

/// Rank by fraction-free (Bareiss) elimination. Over a field every division
/// by the previous pivot is exact, so entries stay integral combinations.
inline std::size_t rank(CycMatrix m) {
  const int cond = matrix_conductor(m);
  CycNum prev(cond, 1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    const CycNum piv = m(row, col);
    const CycNum prev_inv = prev.inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const CycNum lead = m(r, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        CycNum v = piv * m(r, j);
        if (!lead.is_zero() && !m(row, j).is_zero()) v -= lead * m(row, j);
        m(r, j) = v.is_zero() ? v : v * prev_inv;
      }
      m(r, col) = CycNum(cond);
    }
    prev = piv;
    ++row;
  }
  return row;
}

/// Determinant by fraction-free elimination.
inline CycNum determinant(CycMatrix m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  const int cond = matrix_conductor(m);
  if (n == 0) return CycNum(cond, 1);
  CycNum prev(cond, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return CycNum(cond);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    const CycNum prev_inv = prev.inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycNum v = m(k, k) * m(r, j);
        if (!m(r, k).is_zero() && !m(k, j).is_zero()) v -= m(r, k) * m(k, j);
        m(r, j) = v.is_zero() ? v : v * prev_inv;
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

inline std::optional<CycMatrix> inverse(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const int cond = matrix_conductor(m);
  CycMatrix aug = zero_matrix(n, 2 * n, cond);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycNum(cond, 1);
  }
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  CycMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

/// Indices of a maximal set of linearly independent columns, greedy in
/// column order.
inline std::vector<std::size_t> pivot_columns(const CycMatrix& m) { return rref(m).pivots; }

/// Coordinates x with basis * x = v, where basis has independent columns.
inline std::optional<CycVector> solve_in_span(const CycMatrix& basis, const CycVector& v) {
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  const int cond = v.empty() ? matrix_conductor(basis) : v[0].conductor();
  CycMatrix aug = zero_matrix(n, k + 1, cond);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(i, j);
    aug(i, k) = v.at(i);
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  CycVector x(k, CycNum(cond));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, k);
  return x;
}

}  // namespace lgorb

#endif  // LGORB_LINALG_HPP_
