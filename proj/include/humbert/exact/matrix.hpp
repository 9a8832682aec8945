#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "humbert/error.hpp"
#include "humbert/exact/rational.hpp"

namespace humbert::exact {

/// Dense row-major matrix over an exact field (Rational or GaussRational).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "matrix data size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `height`).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != height) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "appended row length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (T& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j).is_zero() || v[j].is_zero()) continue;
        out[i] += (*this)(i, j) * v[j];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixG = Matrix<GaussRational>;
using VectorQ = std::vector<Rational>;
using VectorG = std::vector<GaussRational>;

template <typename T>
struct RowEchelon {
  Matrix<T> reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Zero entries are skipped, which keeps the sparse
/// operator matrices arising from polynomial actions cheap.
template <typename T>
RowEchelon<T> row_reduce(Matrix<T> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const T inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<T> reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of {v : Mv = 0}. Each basis vector has a 1 in its own free column and
/// 0 in every other free column, so coordinates of any kernel element in this
/// basis are read off at the free columns (see kernel_coordinates).
template <typename T>
struct KernelBasis {
  std::vector<std::vector<T>> vectors;
  std::vector<std::size_t> free_columns;
};

template <typename T>
KernelBasis<T> kernel_with_free_columns(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  KernelBasis<T> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      if (!ech.reduced(r, f).is_zero()) v[ech.pivots[r]] = -ech.reduced(r, f);
    }
    out.vectors.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  return kernel_with_free_columns(m).vectors;
}

/// One particular solution of Ax = b, or nullopt when inconsistent.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, std::span<const T> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve rhs length");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_reduce(std::move(aug));
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <typename T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Rank of the span of a family of equal-length vectors.
template <typename T>
std::size_t span_rank(const std::vector<std::vector<T>>& vectors, std::size_t length) {
  if (vectors.empty()) return 0;
  Matrix<T> m(vectors.size(), length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != length) throw Error(ErrorCode::DimensionMismatch, "span_rank vector length");
    for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  }
  return rank(m);
}

/// Coordinates of `v` in the span of `basis`, or nullopt when v is outside it.
template <typename T>
std::optional<std::vector<T>> coordinates_in_span(const std::vector<std::vector<T>>& basis, const std::vector<T>& v) {
  const Matrix<T> a = Matrix<T>::from_columns(basis, v.size());
  return solve(a, std::span<const T>(v));
}

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by exact symmetric congruence diagonalization.
Signature signature_of_symmetric(const MatrixQ& m);

std::vector<std::string> to_strings(std::span<const Rational> v);

}  // namespace humbert::exact
