#pragma once

// Dense matrices over an exact field, stored row-major. A linear map
// f: V -> W with dim V = c and dim W = r is an r x c matrix acting on
// column vectors; composition g∘f is the product g*f. Zero-dimensional
// shapes (0 x c, r x 0) are first-class values.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comodlim {

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o, "+");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o, "-");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (T& x : r.data_) x = -x;
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw ShapeError("matrix product shape mismatch: " + shape_str() + " * " + o.shape_str());
    Matrix r(rows_, o.cols_);
    // i-k-j order with a skip on zero left entries; the structural matrices
    // of this library (coactions of cofree comodules, Kronecker factors)
    // are mostly zeros.
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        const T* brow = &o.data_[k * o.cols_];
        T* rrow = &r.data_[i * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (brow[j] != 0) rrow[j] += a * brow[j];
        }
      }
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (T& x : r.data_) x *= s;
    return r;
  }

  /// Columns [c0, c1) as a separate matrix.
  Matrix col_slice(std::size_t c0, std::size_t c1) const {
    Matrix r(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
    return r;
  }

  /// Rows [r0, r1) as a separate matrix.
  Matrix row_slice(std::size_t r0, std::size_t r1) const {
    Matrix r(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
    return r;
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  /// Matrix-vector product.
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a != 0 && v[k] != 0) r[i] += a * v[k];
      }
    return r;
  }

  static Matrix from_column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string("shape mismatch in ") + op + ": " + shape_str() +
                       " vs " + o.shape_str());
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

/// Kronecker product with left-factor-major flattening: basis vector
/// e_i ⊗ e_j of the product space has flat index i*dim_right + j, so
/// kron(a, b) * flatten(u, v) = flatten(a*u, b*v).
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& t = b(k, l);
          if (t != 0) r(i * b.rows() + k, j * b.cols() + l) = s * t;
        }
    }
  return r;
}

/// [a | b]
template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Matrix<T> r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

/// [a ; b]
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack col mismatch");
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <typename T>
Matrix<T> vstack(const std::vector<Matrix<T>>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<T> r(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack col mismatch");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(at + i, j) = b(i, j);
    at += b.rows();
  }
  return r;
}

/// (I_k ⊗ a) * b computed block-row by block-row; b must have k*a.cols() rows.
template <typename T>
Matrix<T> blockdiag_apply(std::size_t k, const Matrix<T>& a, const Matrix<T>& b) {
  if (b.rows() != k * a.cols()) throw ShapeError("blockdiag_apply shape mismatch");
  Matrix<T> r(k * a.rows(), b.cols());
  for (std::size_t blk = 0; blk < k; ++blk) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t t = 0; t < a.cols(); ++t) {
        const T& s = a(i, t);
        if (s == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const T& x = b(blk * a.cols() + t, j);
          if (x != 0) r(blk * a.rows() + i, j) += s * x;
        }
      }
  }
  return r;
}

}  // namespace comodlim
