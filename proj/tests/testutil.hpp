#pragma once

// Shared test helpers. The oracle_* functions are deliberately independent
// of the library's elimination code paths: rank via fraction-free Bareiss
// elimination on cleared denominators, membership via rank comparison, and
// tensor evaluation by direct index loops.

#include <cstdint>
#include <random>
#include <vector>

#include "comodlim/linalg.hpp"
#include "comodlim/matrix.hpp"
#include "comodlim/rational.hpp"

namespace testutil {

using comodlim::BigInt;
using comodlim::Matrix;
using comodlim::Rational;
using Mat = Matrix<Rational>;

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Small rational with numerator in [-3,3]; mostly integers, occasionally
/// halves, so entry growth stays manageable under exact elimination.
inline Rational small_rational(std::mt19937_64& rng) {
  const long num = rand_int(rng, -3, 3);
  const long den = rand_below(rng, 4) == 0 ? 2 : 1;
  return Rational(num, den);
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

/// Rank by fraction-free Bareiss elimination on the integer matrix obtained
/// by clearing denominators row by row.
inline std::size_t oracle_rank(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const BigInt d = comodlim::denominator(m(i, j));
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = comodlim::numerator(m(i, j)) * (lcm / comodlim::denominator(m(i, j)));
  }
  std::size_t rk = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[rk][c] * a[i][j] - a[i][c] * a[rk][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

inline std::size_t oracle_nullity(const Mat& m) { return m.cols() - oracle_rank(m); }

/// v ∈ span(columns of b), decided by comparing oracle ranks.
inline bool oracle_member(const Mat& b, const std::vector<Rational>& v) {
  return oracle_rank(comodlim::hstack(b, Mat::from_column(v))) == oracle_rank(b);
}

inline bool oracle_subspace_le(const Mat& a, const Mat& b) {
  // every column of a lies in span(b)
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!oracle_member(b, a.col(j))) return false;
  return true;
}

/// flatten(u, v) with left-factor-major indexing.
inline std::vector<Rational> flatten(const std::vector<Rational>& u,
                                     const std::vector<Rational>& v) {
  std::vector<Rational> w(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[i * v.size() + j] = u[i] * v[j];
  return w;
}

inline bool is_zero_vec(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace testutil
