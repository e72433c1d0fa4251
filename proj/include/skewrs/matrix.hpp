#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewrs/errors.hpp"
#include "skewrs/field_concepts.hpp"

namespace skewrs {

/// Dense row-major matrix over a field context.
template <SkewField F>
class Matrix {
 public:
  using Element = ElementOf<F>;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Element> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  std::vector<Element> column(std::size_t j) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

 private:
  const F* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

template <SkewField F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Row vector times matrix: v * A.
template <SkewField F>
std::vector<ElementOf<F>> row_times(std::span<const ElementOf<F>> v, const Matrix<F>& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("vector length does not match matrix rows");
  const F& f = a.field();
  std::vector<ElementOf<F>> out(a.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (f.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], a(i, j)));
  }
  return out;
}

template <SkewField F>
struct EchelonForm {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot is the first nonzero entry in scan order.
template <SkewField F>
EchelonForm<F> row_echelon(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(scale, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return EchelonForm<F>{std::move(m), std::move(pivots)};
}

template <SkewField F>
Matrix<F> rref(const Matrix<F>& a) {
  return row_echelon(a).matrix;
}

/// Reduced column echelon form: rref of the transpose, transposed back.
template <SkewField F>
Matrix<F> rcef(const Matrix<F>& a) {
  return rref(a.transpose()).transpose();
}

template <SkewField F>
std::size_t rank(const Matrix<F>& a) {
  return row_echelon(a).rank();
}

/// The unique X with X * A = b, for square nonsingular A.
template <SkewField F>
std::vector<ElementOf<F>> solve_row_system(const Matrix<F>& a, std::span<const ElementOf<F>> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("solve_row_system needs a square matrix");
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  // X A = b  <=>  A^T X^T = b^T.
  Matrix<F> aug(a.field(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b[i];
  }
  const auto ech = row_echelon(std::move(aug));
  if (ech.rank() != n || ech.pivots.back() != n - 1)
    throw ArithmeticError("singular system");
  return ech.matrix.column(n);
}

/// Basis (as rows) of the left kernel {X : X * A = 0}.
template <SkewField F>
Matrix<F> left_kernel(const Matrix<F>& a) {
  const F& f = a.field();
  const auto ech = row_echelon(a.transpose());
  const std::size_t n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<ElementOf<F>>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<ElementOf<F>> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v[ech.pivots[r]] = f.neg(ech.matrix(r, free));
    basis.push_back(std::move(v));
  }
  Matrix<F> out(f, basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = basis[i][j];
  return out;
}

/// Index i if `row` is the canonical vector e_i, otherwise -1.
template <SkewField F>
long canonical_index(const F& f, std::span<const ElementOf<F>> row) {
  long index = -1;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (f.is_zero(row[j])) continue;
    if (index >= 0 || !(row[j] == f.one())) return -1;
    index = static_cast<long>(j);
  }
  return index;
}

template <SkewField F>
std::string format_matrix(const Matrix<F>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += m.field().format(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace skewrs
