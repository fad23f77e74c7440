#pragma once

// Exact integer / rational matrix kernels: fraction-free determinants,
// Cramer-rule inverse entries, a small permanent (test oracle), and the
// lattice-path binomial coefficient convention. No floating point here.

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holeyhex/common.hpp"

namespace holeyhex {

// Dense exact matrix with optional row/column labels. Labels are opaque to
// the kernels; callers use them to keep vertex <-> index bookkeeping honest.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;
  std::vector<std::string> row_labels;  // empty or size == rows
  std::vector<std::string> col_labels;  // empty or size == cols

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool square() const { return rows == cols; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

namespace detail {

// Synchronized factorial cache. Growth is append-only, so a value read under
// the lock is identical to what recomputation would give.
inline const Int& factorial_cached(unsigned n) {
  static std::mutex mtx;
  static std::vector<Int> table{Int(1)};
  std::lock_guard<std::mutex> lk(mtx);
  while (table.size() <= n) table.push_back(table.back() * Int(table.size()));
  return table[n];
}

}  // namespace detail

inline Int factorial(long n) {
  if (n < 0) fail(Errc::domain_error, "factorial of negative integer " + std::to_string(n));
  return detail::factorial_cached(static_cast<unsigned>(n));
}

// Binomial coefficient counting monotone lattice paths: n!/(k!(n-k)!) when
// 0 <= k <= n, and 0 for every other integer pair (end point left of or
// below the start point, or not reachable).
inline Int binom_int(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Same coefficient with both arguments in doubled (half-integer safe)
// representation. Path counts only ever produce integer arguments, so an odd
// doubled value signals a coordinate-parity bug upstream.
inline Int binom2(long n2, long k2) {
  if ((n2 & 1) || (k2 & 1))
    fail(Errc::half_integer_argument,
         "binomial arguments must be integers, got doubled (" + std::to_string(n2) + "," +
             std::to_string(k2) + ")");
  return binom_int(n2 / 2, k2 / 2);
}

namespace detail {

// Bareiss fraction-free elimination. Every division is exact, keeping the
// intermediates integral instead of letting rationals blow up.
inline Int det_bareiss(IntMatrix m) {
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by Sylvester's identity
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace detail

inline Int det_exact(const IntMatrix& m) {
  if (!m.square()) fail(Errc::not_square, "determinant of non-square matrix");
  return detail::det_bareiss(m);
}

// Rational determinant: clear denominators row by row, run the integer
// elimination, then undo the scaling.
inline Rat det_exact(const RatMatrix& m) {
  if (!m.square()) fail(Errc::not_square, "determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix scaled(n, n);
  Int scale_product(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int row_lcm(1);
    for (std::size_t j = 0; j < n; ++j) {
      Int d = denominator(m.at(i, j));
      row_lcm = lcm(row_lcm, d);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& q = m.at(i, j);
      scaled.at(i, j) = numerator(q) * (row_lcm / denominator(q));
    }
    scale_product *= row_lcm;
  }
  return Rat(detail::det_bareiss(std::move(scaled)), scale_product);
}

template <class T>
Matrix<T> minor_removed(const Matrix<T>& m, std::size_t row, std::size_t col) {
  assert(row < m.rows && col < m.cols);
  Matrix<T> out(m.rows - 1, m.cols - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& row_idx,
                    const std::vector<std::size_t>& col_idx) {
  Matrix<T> out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out.at(i, j) = m.at(row_idx[i], col_idx[j]);
  return out;
}

template <class A, class B, class R = B>
Matrix<R> matmul(const Matrix<A>& a, const Matrix<B>& b) {
  assert(a.cols == b.rows);
  Matrix<R> out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += R(a.at(i, k)) * R(b.at(k, j));
    }
  return out;
}

// Entry (i,j) of m^{-1}, 1-based, computed as the signed minor over the
// determinant: (-1)^{i+j} det(m with row j and column i removed) / det(m).
template <class T>
Rat cramer_entry(const Matrix<T>& m, std::size_t i, std::size_t j) {
  if (!m.square()) fail(Errc::not_square, "cramer_entry of non-square matrix");
  if (i < 1 || j < 1 || i > m.rows || j > m.cols)
    fail(Errc::domain_error, "cramer_entry index out of range");
  Rat det = Rat(det_exact(m));
  if (det == 0) fail(Errc::singular, "cramer_entry of singular matrix");
  Rat minor = Rat(det_exact(minor_removed(m, j - 1, i - 1)));
  Rat value = minor / det;
  return ((i + j) % 2 == 0) ? value : -value;
}

// Ryser inclusion-exclusion permanent. Exponential; used only as a desk-scale
// oracle for |det| = |perm| on hole-free hexagons.
inline Int permanent_small(const IntMatrix& m) {
  if (!m.square()) fail(Errc::not_square, "permanent of non-square matrix");
  const std::size_t n = m.rows;
  if (n > 14) fail(Errc::too_large, "permanent capped at 14x14, got " + std::to_string(n));
  if (n == 0) return 1;
  Int total(0);
  std::vector<Int> row_sum(n);
  const unsigned long full = 1ul << n;
  for (unsigned long mask = 1; mask < full; ++mask) {
    // Gray-code style recomputation is unnecessary at this size.
    for (std::size_t i = 0; i < n; ++i) row_sum[i] = 0;
    std::size_t popcount = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1ul << j))) continue;
      ++popcount;
      for (std::size_t i = 0; i < n; ++i) row_sum[i] += m.at(i, j);
    }
    Int prod(1);
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if ((n - popcount) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }
inline Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

}  // namespace holeyhex
