/*
 * Copyright 2026 The pfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dense square matrices over any QAlgebra element type.
//
// Element access through operator() is 0-based. Operations that mirror the
// mathematical notation (remove_row_col_pair, Laplace pivots, matchings)
// take 1-based indices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/ring.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

template <QAlgebra T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, zero<T>()) {}
  Matrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n)
      throw std::invalid_argument("Matrix: expected " + std::to_string(n * n) + " entries, got " +
                                  std::to_string(data_.size()));
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw std::invalid_argument("Matrix: rows must form a square");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one<T>();
    return m;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const T> entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return pfl::is_zero(x); });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <typename T>
void accumulate(T& acc, const T& x) {
  if constexpr (requires { acc += x; }) {
    acc += x;
  } else {
    acc = acc + x;
  }
}

/// Splits [0, n) into contiguous chunks, one per thread. Each output row is
/// written by exactly one thread, so results do not depend on threads.
template <typename F>
void run_row_chunks(std::size_t n, unsigned threads, F&& rows) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), n);
  if (workers <= 1) {
    rows(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk)
    pool.emplace_back(rows, begin, std::min(n, begin + chunk));
}

inline void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

}  // namespace detail

template <QAlgebra T>
Matrix<T> identity(std::size_t n) {
  return Matrix<T>::identity(n);
}

/// Runs RingTraits<T>::admit on every entry.
template <QAlgebra T>
void admit_entries(const Matrix<T>& a) {
  for (const T& x : a.entries()) RingTraits<T>::admit(x);
}

template <QAlgebra T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

template <QAlgebra T>
T trace(const Matrix<T>& a) {
  T s = zero<T>();
  for (std::size_t i = 0; i < a.size(); ++i) detail::accumulate(s, a(i, i));
  return s;
}

template <QAlgebra T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a.size(), b.size(), "matrix add");
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <QAlgebra T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a.size(), b.size(), "matrix subtract");
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <QAlgebra T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <QAlgebra T>
Matrix<T> scalar_multiply(const T& s, const Matrix<T>& a) {
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
  return c;
}

/// a + s*I.
template <QAlgebra T>
Matrix<T> add_scaled_identity(Matrix<T> a, const T& s) {
  for (std::size_t i = 0; i < a.size(); ++i) detail::accumulate(a(i, i), s);
  return a;
}

template <QAlgebra T>
Matrix<T> divide_entries_by_integer(const Matrix<T>& a, std::int64_t k) {
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = pfl::divide_by_integer(a(i, j), k);
  return c;
}

/// Entrywise conversion to another element type.
template <QAlgebra U, QAlgebra T, typename F>
Matrix<U> map_entries(const Matrix<T>& a, F f) {
  std::vector<U> out;
  out.reserve(a.size() * a.size());
  for (const T& x : a.entries()) out.push_back(f(x));
  return Matrix<U>(a.size(), std::move(out));
}

/// Product with each entry summed in ascending inner index, so results are
/// reproducible and independent of `threads`. Rows are split across threads.
template <QAlgebra T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, unsigned threads = 1) {
  detail::require_same_size(a.size(), b.size(), "mat_mul");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  if constexpr (requires { RingTraits<T>::prepare_right(b.entries()); }) {
    // Ring-supplied row kernel (exact rationals accumulate integer
    // numerators and normalize once per output entry).
    const auto prepared = RingTraits<T>::prepare_right(b.entries());
    auto rows = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) RingTraits<T>::multiply_row(a.row(i), prepared, c.row(i));
    };
    detail::run_row_chunks(n, threads, rows);
    return c;
  }
  // Column panels of B stay cache resident while every row of A sweeps them.
  constexpr std::size_t kPanel = 64;
  auto rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t j0 = 0; j0 < n; j0 += kPanel) {
      const std::size_t j1 = std::min(n, j0 + kPanel);
      for (std::size_t i = begin; i < end; ++i) {
        T* out = c.row(i).data();
        for (std::size_t k = 0; k < n; ++k) {
          const T& aik = a(i, k);
          if (is_zero(aik)) continue;
          const T* brow = b.row(k).data();
          for (std::size_t j = j0; j < j1; ++j) detail::accumulate(out[j], aik * brow[j]);
        }
      }
    }
  };
  detail::run_row_chunks(n, threads, rows);
  return c;
}

template <QAlgebra T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mat_mul(a, b);
}

inline double max_abs_entry(const Matrix<double>& a) {
  double m = 0.0;
  for (double x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

/// A matrix certified skew: a_ij == -a_ji and a_ii == 0.
template <QAlgebra T>
class SkewMatrix {
 public:
  /// Exact check. For double this means literal equality; use the
  /// tolerance overload for measured data.
  static SkewMatrix validate(Matrix<T> m) {
    admit_entries(m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!is_zero(m(i, i)))
        throw ValidationError("not skew-symmetric: nonzero diagonal entry at (" +
                              std::to_string(i + 1) + ", " + std::to_string(i + 1) + ")");
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!(m(i, j) == -m(j, i)))
          throw ValidationError("not skew-symmetric: a(" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ") != -a(" + std::to_string(j + 1) +
                                ", " + std::to_string(i + 1) + ")");
    }
    return SkewMatrix(std::move(m));
  }

  /// Accepts |a_ij + a_ji| <= tolerance and |a_ii| <= tolerance, then
  /// snaps the result to exact skew form (zero diagonal, lower = -upper).
  static SkewMatrix validate(Matrix<T> m, double tolerance)
    requires std::same_as<T, double>
  {
    admit_entries(m);
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (std::abs(m(i, i)) > tolerance)
        throw ValidationError("not skew-symmetric within tolerance: diagonal entry " +
                              std::to_string(i + 1));
      m(i, i) = 0.0;
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (std::abs(m(i, j) + m(j, i)) > tolerance)
          throw ValidationError("not skew-symmetric within tolerance at (" + std::to_string(i + 1) +
                                ", " + std::to_string(j + 1) + ")");
        m(j, i) = -m(i, j);
      }
    }
    return SkewMatrix(std::move(m));
  }

  const Matrix<T>& matrix() const { return m_; }
  operator const Matrix<T>&() const { return m_; }  // NOLINT
  std::size_t size() const { return m_.size(); }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) {}

  template <QAlgebra U>
  friend SkewMatrix<U> standard_J(std::size_t n);
  template <QAlgebra U>
  friend SkewMatrix<U> alt_J(std::size_t n);
  template <QAlgebra U>
  friend SkewMatrix<U> remove_row_col_pair(const SkewMatrix<U>& a, std::size_t i, std::size_t j);
  template <QAlgebra U>
  friend SkewMatrix<U> skew_symmetrize(const Matrix<U>& a);

  Matrix<T> m_;
};

/// (A - A^T) / 2. Never applied implicitly.
template <QAlgebra U>
SkewMatrix<U> skew_symmetrize(const Matrix<U>& a) {
  admit_entries(a);
  Matrix<U> s = divide_entries_by_integer(a - transpose(a), 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s(i, i) = zero<U>();
    for (std::size_t j = i + 1; j < s.size(); ++j) s(j, i) = -s(i, j);
  }
  return SkewMatrix<U>(std::move(s));
}

/// Which skew matrix J with J^2 = -I drives the Pfaffian recursion.
enum class JForm {
  standard,     ///< 2x2 blocks [[0, 1], [-1, 0]] on the diagonal
  alternative,  ///< [[0, I], [-I, 0]]
};

inline std::string to_string(JForm j) {
  return j == JForm::standard ? "standard" : "alternative";
}

inline void require_even(std::size_t n, const char* what) {
  if (n % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                                " is odd");
}

template <QAlgebra U>
SkewMatrix<U> standard_J(std::size_t n) {
  require_even(n, "standard_J");
  Matrix<U> j(n);
  for (std::size_t k = 0; k < n; k += 2) {
    j(k, k + 1) = one<U>();
    j(k + 1, k) = -one<U>();
  }
  return SkewMatrix<U>(std::move(j));
}

template <QAlgebra U>
SkewMatrix<U> alt_J(std::size_t n) {
  require_even(n, "alt_J");
  const std::size_t h = n / 2;
  Matrix<U> j(n);
  for (std::size_t k = 0; k < h; ++k) {
    j(k, k + h) = one<U>();
    j(k + h, k) = -one<U>();
  }
  return SkewMatrix<U>(std::move(j));
}

template <QAlgebra T>
SkewMatrix<T> j_matrix(JForm form, std::size_t n) {
  return form == JForm::standard ? standard_J<T>(n) : alt_J<T>(n);
}

/// J * m using only row moves and negations.
template <QAlgebra T>
Matrix<T> left_mul_by_J(JForm form, const Matrix<T>& m) {
  const std::size_t n = m.size();
  require_even(n, "left_mul_by_J");
  Matrix<T> out(n);
  auto copy_row = [&](std::size_t dst, std::size_t src, bool negate) {
    std::span<const T> s = m.row(src);
    std::span<T> d = out.row(dst);
    for (std::size_t c = 0; c < n; ++c) d[c] = negate ? -s[c] : s[c];
  };
  if (form == JForm::standard) {
    for (std::size_t k = 0; k < n; k += 2) {
      copy_row(k, k + 1, false);
      copy_row(k + 1, k, true);
    }
  } else {
    const std::size_t h = n / 2;
    for (std::size_t k = 0; k < h; ++k) {
      copy_row(k, k + h, false);
      copy_row(k + h, k, true);
    }
  }
  return out;
}

/// A<i,j>: removes rows and columns i and j (1-based, distinct).
template <QAlgebra U>
SkewMatrix<U> remove_row_col_pair(const SkewMatrix<U>& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("remove_row_col_pair: need distinct indices in 1.." +
                                std::to_string(n) + ", got (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  std::vector<std::size_t> keep;
  keep.reserve(n - 2);
  for (std::size_t r = 1; r <= n; ++r)
    if (r != i && r != j) keep.push_back(r - 1);
  Matrix<U> sub(n - 2);
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) sub(r, c) = a(keep[r], keep[c]);
  return SkewMatrix<U>(std::move(sub));
}

}  // namespace pfl
