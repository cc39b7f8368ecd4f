#pragma once

// Exact linear algebra over a field: reduced echelon forms, kernels and
// images, canonical subspaces, quotients and division of linear maps.
// Rank decisions here are load-bearing for every categorical construction,
// so all arithmetic is exact.

#include <cstddef>
#include <optional>
#include <vector>

#include "comodlim/matrix.hpp"

namespace comodlim {

template <typename T>
struct RrefResult {
  Matrix<T> mat;
  std::vector<std::size_t> pivots;  // pivot column indices, strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
template <typename T>
RrefResult<T> rref(Matrix<T> m) {
  RrefResult<T> res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    if (m(r, c) != 1) {
      const T inv = T(1) / m(r, c);
      m(r, c) = T(1);
      for (std::size_t j = c + 1; j < cols; ++j)
        if (m(r, j) != 0) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const T f = m(i, c);
      m(i, c) = T(0);
      for (std::size_t j = c + 1; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.mat = std::move(m);
  return res;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank();
}

/// Basis of {v : m*v = 0}, one column per free variable of the rref.
/// Not in canonical form; see Subspace for the canonical representative.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  const auto re = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::size_t nullity = cols - re.rank();
  Matrix<T> k(cols, nullity);
  std::size_t out = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(f, out) = T(1);
    for (std::size_t t = 0; t < re.pivots.size(); ++t)
      k(re.pivots[t], out) = -re.mat(t, f);
    ++out;
  }
  return k;
}

/// A linear subspace of a fixed coordinate space, held as a canonical
/// reduced column-echelon basis: pivot rows strictly increasing, pivot
/// entries 1, pivot rows zero elsewhere. Two subspaces are equal exactly
/// when their representations are equal.
template <typename T>
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<T>(ambient, 0);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return from_columns(Matrix<T>::identity(ambient));
  }

  /// Canonicalizes the span of the given columns.
  static Subspace from_columns(const Matrix<T>& m) {
    const auto re = rref(m.transpose());
    Subspace s;
    s.ambient_ = m.rows();
    s.basis_ = Matrix<T>(m.rows(), re.rank());
    for (std::size_t j = 0; j < re.rank(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) s.basis_(i, j) = re.mat(j, i);
    s.pivot_rows_ = re.pivots;
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Residual of v after reduction against the echelon basis; zero iff
  /// v lies in the subspace.
  std::vector<T> reduce(std::vector<T> v) const {
    if (v.size() != ambient_) throw ShapeError("Subspace::reduce ambient mismatch");
    for (std::size_t j = 0; j < dim(); ++j) {
      const T c = v[pivot_rows_[j]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < ambient_; ++i)
        if (basis_(i, j) != 0) v[i] -= c * basis_(i, j);
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    for (const T& x : reduce(v))
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    require_same_ambient(o);
    for (std::size_t j = 0; j < o.dim(); ++j)
      if (!contains(o.basis_.col(j))) return false;
    return true;
  }

  /// In-subspace coordinates of v; requires membership.
  std::vector<T> coordinates(const std::vector<T>& v) const {
    if (!contains(v)) throw ShapeError("vector not in subspace");
    std::vector<T> c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivot_rows_[j]];
    return c;
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.require_same_ambient(b);
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_);
    const Matrix<T> k = kernel_basis(hstack(a.basis_, b.basis_));
    // Kernel vectors (u; w) satisfy A*u = -B*w, so A*u spans the meet.
    return from_columns(a.basis_ * k.row_slice(0, a.dim()));
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.require_same_ambient(b);
    return from_columns(hstack(a.basis_, b.basis_));
  }

  void require_same_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw ShapeError("subspace ambient dimension mismatch");
  }

 private:
  std::size_t ambient_;
  Matrix<T> basis_;
  std::vector<std::size_t> pivot_rows_;  // leading row of each basis column
};

template <typename T>
Subspace<T> kernel(const Matrix<T>& m) {
  return Subspace<T>::from_columns(kernel_basis(m));
}

template <typename T>
Subspace<T> image(const Matrix<T>& m) {
  return Subspace<T>::from_columns(m);
}

/// {w : m*w ∈ s}; always contains kernel(m).
template <typename T>
Subspace<T> preimage_subspace(const Matrix<T>& m, const Subspace<T>& s) {
  if (m.rows() != s.ambient_dim())
    throw ShapeError("preimage_subspace: codomain does not match subspace ambient");
  if (s.dim() == 0) return kernel(m);
  const Matrix<T> k = kernel_basis(hstack(m, -s.basis()));
  return image(k.row_slice(0, m.cols()));
}

/// Data of the quotient of a coordinate space by a subspace: a surjection
/// with kernel exactly the subspace, and the section that embeds the
/// quotient along the non-pivot coordinates of the echelon basis.
template <typename T>
struct QuotientData {
  std::size_t ambient_dim = 0;
  Subspace<T> kernel;
  Matrix<T> projection;  // (ambient-k) x ambient
  Matrix<T> section;     // ambient x (ambient-k), projection*section = I
};

template <typename T>
QuotientData<T> quotient(std::size_t ambient, const Subspace<T>& s) {
  if (s.ambient_dim() != ambient) throw ShapeError("quotient ambient mismatch");
  QuotientData<T> q;
  q.ambient_dim = ambient;
  q.kernel = s;
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : s.pivot_rows()) is_pivot[p] = true;
  const std::size_t out = ambient - s.dim();
  q.projection = Matrix<T>(out, ambient);
  q.section = Matrix<T>(ambient, out);
  std::size_t r = 0;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (is_pivot[i]) continue;
    q.projection(r, i) = T(1);
    for (std::size_t j = 0; j < s.dim(); ++j)
      q.projection(r, s.pivot_rows()[j]) = -s.basis()(i, j);
    q.section(i, r) = T(1);
    ++r;
  }
  return q;
}

/// Particular solution of a*X = b with free variables set to zero, or
/// nothing when some column of b is outside the image of a.
template <typename T>
std::optional<Matrix<T>> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_linear row mismatch");
  const auto re = rref(hstack(a, b));
  for (auto p : re.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t t = 0; t < re.pivots.size(); ++t)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(re.pivots[t], j) = re.mat(t, a.cols() + j);
  return x;
}

enum class FactorSide {
  Left,   // find g with through*g = f
  Right,  // find g with g*through = f
};

template <typename T>
struct Factorization {
  Matrix<T> g;
  /// Dimension of the solution space per column of the unknown; 0 means
  /// the factorization is unique.
  std::size_t freedom = 0;
};

/// Mediating-map solver: divides f by `through` on the requested side.
template <typename T>
std::optional<Factorization<T>> solve_factor(const Matrix<T>& through,
                                             const Matrix<T>& f, FactorSide side) {
  if (side == FactorSide::Left) {
    if (through.rows() != f.rows())
      throw ShapeError("solve_factor(Left): row mismatch");
    auto sol = solve_linear(through, f);
    if (!sol) return std::nullopt;
    return Factorization<T>{std::move(*sol), through.cols() - rank(through)};
  }
  if (through.cols() != f.cols())
    throw ShapeError("solve_factor(Right): column mismatch");
  auto sol = solve_linear(through.transpose(), f.transpose());
  if (!sol) return std::nullopt;
  return Factorization<T>{sol->transpose(), through.rows() - rank(through)};
}

}  // namespace comodlim
