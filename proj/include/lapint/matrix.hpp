#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lapint/arith.hpp"
#include "lapint/mpoly.hpp"
#include "lapint/upoly.hpp"

namespace lapint {

/// Dense row-major matrix over a commutative ring (Integer or MPoly).
template <class Ring>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Ring(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Ring>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Ring& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Ring& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  Ring trace() const {
    require_square("trace");
    Ring t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const Ring&>()))> {
    Matrix<decltype(f(std::declval<const Ring&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!(a.data_[k] == b.data_[k])) return false;
    }
    return true;
  }

  void require_square(const char* what) const {
    if (!is_square()) {
      throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + ", not square");
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<MPoly>;

/// Coefficients of det(xI - M) in ascending order, computed with Berkowitz's
/// division-free recurrence, so it is exact over any commutative ring. The result
/// has size n+1 and its last entry is 1.
template <class Ring>
std::vector<Ring> char_poly_coefficients(const Matrix<Ring>& m) {
  m.require_square("char_poly");
  const std::size_t n = m.rows();
  // Descending coefficients of the characteristic polynomial of the leading r x r block.
  std::vector<Ring> c{Ring(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading block is (r+1) x (r+1): A = [[M, S], [R, a]] with M of size r.
    // First column of the Toeplitz matrix: 1, -a, -R S, -R M S, ..., -R M^{r-1} S.
    std::vector<Ring> col;
    col.reserve(r + 2);
    col.push_back(Ring(1));
    col.push_back(-m(r, r));
    std::vector<Ring> v(r);  // M^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Ring dot(0);
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * v[j];
      col.push_back(-dot);
      if (k + 1 < r) {
        std::vector<Ring> next(r, Ring(0));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    // Multiply the (r+2) x (r+1) lower-triangular Toeplitz matrix by c.
    std::vector<Ring> next(r + 2, Ring(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] += col[i - j] * c[j];
    }
    c = std::move(next);
  }
  return {c.rbegin(), c.rend()};
}

/// Characteristic polynomial of an integer matrix.
UPoly char_poly(const IntMatrix& m);

/// Characteristic polynomial of a polynomial matrix, as an MPoly in `var`
/// and the entries' own variables.
MPoly char_poly(const PolyMatrix& m, const std::string& var = "λ");

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Deletes the listed rows and the matching columns. Indices must be distinct and in range.
template <class Ring>
Matrix<Ring> principal_submatrix(const Matrix<Ring>& m, std::span<const std::size_t> removed) {
  m.require_square("principal_submatrix");
  std::vector<bool> drop(m.rows(), false);
  for (std::size_t idx : removed) {
    if (idx >= m.rows()) {
      throw std::out_of_range("principal_submatrix: index " + std::to_string(idx) +
                              " out of range for order " + std::to_string(m.rows()));
    }
    if (drop[idx]) throw std::invalid_argument("principal_submatrix: repeated index");
    drop[idx] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!drop[i]) keep.push_back(i);
  }
  Matrix<Ring> out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = m(keep[i], keep[j]);
  }
  return out;
}

template <class Ring>
Matrix<Ring> block_diag(std::span<const Matrix<Ring>> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<Ring> out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

/// Interior block of a path Laplacian: 2 on the diagonal, -1 next to it.
IntMatrix path_interior_block(std::size_t k);

/// Plain text with right-aligned columns; optional separators after the given
/// row/column offsets reproduce a block layout.
std::string format_matrix(const IntMatrix& m, std::span<const std::size_t> block_offsets = {});
std::string format_matrix(const PolyMatrix& m);

/// Embeds an integer matrix as a constant polynomial matrix.
PolyMatrix to_poly_matrix(const IntMatrix& m);

/// Substitutes integer parameter values; every entry must become constant.
IntMatrix evaluate_matrix(const PolyMatrix& m, const std::map<std::string, Integer>& values);

}  // namespace lapint
