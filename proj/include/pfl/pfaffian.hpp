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

// Pfaffians of skew-symmetric matrices over a commutative Q-algebra.
//
// pfaffian_fl is the Faddeev-LeVerrier style recursion on the Pfaffian
// characteristic polynomial Psi(t) = pf(tJ + A) = sum_j c_{m-j} t^j, n = 2m:
//
//   N_1     = -pf(J) J
//   M_k     = A N_k
//   c_k     = tr(M_k) / (2k)
//   N_{k+1} = J M_k - c_k J
//
// c_m = pf(A), N_m is the Pfaff-adjugate, and A N_m - c_m I must vanish.
// Two independent references are provided: the signed sum over perfect
// matchings and the Laplace-type expansion along a row.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/matrix.hpp"
#include "pfl/polynomial.hpp"
#include "pfl/ring.hpp"

namespace pfl {

/// Default size bound for the perfect-matching sum; (n-1)!! terms.
inline constexpr std::size_t kMatchingsCap = 14;

/// A partition of {1..n} into pairs (i, j) with i < j.
class PerfectMatching {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// Throws std::invalid_argument unless the pairs are ordered, disjoint and
  /// cover {1..2*pairs.size()}.
  explicit PerfectMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    const std::size_t n = 2 * pairs_.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& [i, j] : pairs_) {
      if (!(i < j)) throw std::invalid_argument("PerfectMatching: pair must satisfy i < j");
      if (i < 1 || j > n) throw std::invalid_argument("PerfectMatching: index outside 1..n");
      if (seen[i] || seen[j]) throw std::invalid_argument("PerfectMatching: pairs overlap");
      seen[i] = seen[j] = true;
    }
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return 2 * pairs_.size(); }

 private:
  std::vector<Pair> pairs_;
};

/// Sign of the permutation [1 .. n] -> [i_1, j_1, ..., i_m, j_m], by
/// inversion count. Independent of the order in which pairs are listed.
inline int matching_sign(const PerfectMatching& p) {
  std::vector<std::size_t> image;
  image.reserve(p.size());
  for (const auto& [i, j] : p.pairs()) {
    image.push_back(i);
    image.push_back(j);
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < image.size(); ++a)
    for (std::size_t b = a + 1; b < image.size(); ++b)
      if (image[a] > image[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Calls f(const PerfectMatching&) for every perfect matching of {1..n},
/// pairing the smallest unpaired index with each larger one in turn.
template <typename F>
void for_each_perfect_matching(std::size_t n, F&& f) {
  if (n % 2 != 0) return;
  std::vector<PerfectMatching::Pair> pairs;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 1;
    while (i <= n && used[i]) ++i;
    if (i > n) {
      f(PerfectMatching(pairs));
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
}

/// The only perfect matching supported by J's nonzero pattern.
inline PerfectMatching j_matching(JForm form, std::size_t n) {
  require_even(n, "j_matching");
  std::vector<PerfectMatching::Pair> pairs;
  const std::size_t m = n / 2;
  for (std::size_t k = 1; k <= m; ++k) {
    if (form == JForm::standard) pairs.emplace_back(2 * k - 1, 2 * k);
    else pairs.emplace_back(k, k + m);
  }
  return PerfectMatching(std::move(pairs));
}

/// pf(J) read off from J's block layout: every entry on the matching is +1,
/// so the Pfaffian is the sign of that single matching.
template <QAlgebra T>
T pfaffian_of_J(JForm form, std::size_t n) {
  return from_integer<T>(matching_sign(j_matching(form, n)));
}

template <QAlgebra T>
struct PfaffianResult {
  T value;                        ///< pf(A); zero for odd n
  Matrix<T> pfaff_adjugate;       ///< N_m; empty for odd n
  std::vector<T> psi_coefficients;  ///< [c_0, ..., c_m]; empty for odd n
  JForm j_form = JForm::standard;
  bool odd_dimension = false;
  Matrix<T> residual;             ///< A N_m - c_m I
  std::optional<double> residual_max_abs;  ///< filled for double only
};

struct PfaffianOptions {
  JForm j_form = JForm::standard;
  unsigned threads = 1;
};

namespace detail {

/// n <- n - c*J, touching only J's nonzero entries.
template <QAlgebra T>
void subtract_scaled_J(Matrix<T>& n, JForm form, const T& c) {
  const std::size_t size = n.size();
  const std::size_t h = size / 2;
  for (std::size_t k = 0; k < h; ++k) {
    const std::size_t r = form == JForm::standard ? 2 * k : k;
    const std::size_t s = form == JForm::standard ? 2 * k + 1 : k + h;
    n(r, s) = n(r, s) - c;
    n(s, r) = n(s, r) + c;
  }
}

}  // namespace detail

/// Pfaffian, Pfaff-adjugate and Psi-coefficients in n/2 matrix products.
/// Odd n yields value 0 with odd_dimension set. Throws ConsistencyError if
/// A N_m != c_m I over an exact ring.
template <QAlgebra T>
PfaffianResult<T> pfaffian_fl(const SkewMatrix<T>& a, PfaffianOptions options = {}) {
  PfaffianResult<T> result;
  result.j_form = options.j_form;
  const std::size_t n = a.size();
  if (n % 2 != 0) {
    result.value = zero<T>();
    result.odd_dimension = true;
    return result;
  }
  const std::size_t m = n / 2;
  const T c0 = pfaffian_of_J<T>(options.j_form, n);
  result.psi_coefficients.reserve(m + 1);
  result.psi_coefficients.push_back(c0);
  if (m == 0) {
    result.value = c0;
    if constexpr (std::same_as<T, double>) result.residual_max_abs = 0.0;
    return result;
  }

  const SkewMatrix<T> j = j_matrix<T>(options.j_form, n);
  Matrix<T> big_n = scalar_multiply(-c0, j.matrix());
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix<T> prod = mat_mul(a.matrix(), big_n, options.threads);
    const T c = divide_by_integer(trace(prod), static_cast<std::int64_t>(2 * k));
    result.psi_coefficients.push_back(c);
    if (k < m) {
      big_n = left_mul_by_J(options.j_form, prod);
      detail::subtract_scaled_J(big_n, options.j_form, c);
    } else {
      result.residual = add_scaled_identity(std::move(prod), -c);
    }
  }
  result.value = result.psi_coefficients.back();
  result.pfaff_adjugate = std::move(big_n);

  if constexpr (std::same_as<T, double>) {
    result.residual_max_abs = max_abs_entry(result.residual);
  } else if constexpr (is_exact_ring_v<T>) {
    if (!result.residual.is_zero())
      throw ConsistencyError("pfaffian_fl: A*N_m - c_m*I is nonzero over an exact ring");
  }
  return result;
}

template <QAlgebra T>
Matrix<T> pfaff_adjugate(const SkewMatrix<T>& a, PfaffianOptions options = {}) {
  if (a.size() % 2 != 0) throw ValidationError("Pfaff-adjugate is undefined for odd n");
  return pfaffian_fl(a, options).pfaff_adjugate;
}

struct MatchingsOptions {
  bool override_cap = false;
  unsigned threads = 1;
};

/// Signed sum over all perfect matchings. Refuses n > kMatchingsCap with a
/// ValidationError unless override_cap is set.
template <QAlgebra T>
T pfaffian_matchings(const SkewMatrix<T>& a, MatchingsOptions options = {}) {
  const std::size_t n = a.size();
  if (n % 2 != 0) return zero<T>();
  if (n == 0) return one<T>();
  if (n > kMatchingsCap && !options.override_cap)
    throw ValidationError("pfaffian_matchings: n = " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMatchingsCap) + " (override to force)");
  if (n > 64) throw ValidationError("pfaffian_matchings: n above 64 is not supported");

  // Pairing the first unpaired index with the one at position q (0-based)
  // among the remaining indices costs q - 1 adjacent transpositions.
  using Mask = std::uint64_t;
  auto walk = [&](auto&& self, Mask unpaired, const T& prefix, bool negative, T& sum) -> void {
    if (unpaired == 0) {
      detail::accumulate(sum, negative ? -prefix : prefix);
      return;
    }
    const int i = std::countr_zero(unpaired);
    Mask rest = unpaired & (unpaired - 1);
    std::size_t q = 0;
    for (Mask scan = rest; scan != 0; scan &= scan - 1, ++q) {
      const int j = std::countr_zero(scan);
      const T& aij = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (is_zero(aij)) continue;
      self(self, rest & ~(Mask{1} << j), prefix * aij, negative != (q % 2 == 1), sum);
    }
  };

  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  // One task per partner of index 1; partial sums are combined in order.
  std::vector<T> partial(n - 1, zero<T>());
  auto branch = [&](std::size_t j) {
    const T& a0j = a(0, j);
    if (is_zero(a0j)) return;
    const Mask rest = all & ~Mask{1} & ~(Mask{1} << j);
    walk(walk, rest, a0j, (j - 1) % 2 == 1, partial[j - 1]);
  };
  const unsigned workers = std::max(1U, options.threads);
  if (workers == 1) {
    for (std::size_t j = 1; j < n; ++j) branch(j);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t j = 1 + w; j < n; j += workers) branch(j);
      });
  }
  T sum = zero<T>();
  for (const T& p : partial) detail::accumulate(sum, p);
  return sum;
}

namespace detail {

// Pfaffian of the principal submatrix on `active` (0-based indices into a,
// ascending), expanded along the row at position `pivot` of `active`.
template <QAlgebra T>
T laplace_expand(const Matrix<T>& a, const std::vector<std::size_t>& active, std::size_t pivot) {
  const std::size_t size = active.size();
  if (size == 0) return one<T>();
  T sum = zero<T>();
  std::vector<std::size_t> sub;
  sub.reserve(size - 2);
  const std::size_t i = pivot + 1;  // 1-based position inside the submatrix
  for (std::size_t q = 0; q < size; ++q) {
    if (q == pivot) continue;
    const T& aij = a(active[pivot], active[q]);
    if (is_zero(aij)) continue;
    sub.clear();
    for (std::size_t r = 0; r < size; ++r)
      if (r != pivot && r != q) sub.push_back(active[r]);
    const std::size_t j = q + 1;
    const bool negative = j < i ? (i + j) % 2 == 1 : (i + j + 1) % 2 == 1;
    const T term = aij * laplace_expand(a, sub, 0);
    if (negative) sum = sum - term;
    else detail::accumulate(sum, term);
  }
  return sum;
}

}  // namespace detail

/// Expansion along row pivot_row (1-based):
///   pf(A) = sum_{j<i} (-1)^{i+j} a_ij pf(A<i,j>) + sum_{j>i} (-1)^{i+j+1} a_ij pf(A<i,j>).
/// Sub-Pfaffians expand along their first row. The empty matrix has pf 1.
template <QAlgebra T>
T pfaffian_laplace(const SkewMatrix<T>& a, std::size_t pivot_row = 1) {
  const std::size_t n = a.size();
  if (n == 0) return one<T>();
  if (pivot_row < 1 || pivot_row > n)
    throw std::invalid_argument("pfaffian_laplace: pivot row " + std::to_string(pivot_row) +
                                " outside 1.." + std::to_string(n));
  if (n % 2 != 0) return zero<T>();
  std::vector<std::size_t> active(n);
  for (std::size_t r = 0; r < n; ++r) active[r] = r;
  return detail::laplace_expand(a.matrix(), active, pivot_row - 1);
}

/// Pfaff-adjugate straight from its definition:
///   b_ij = (-1)^{i+j} pf(A<i,j>) for i < j, (-1)^{i+j+1} pf(A<i,j>) for i > j.
template <QAlgebra T>
Matrix<T> pfaff_adjugate_entrywise(const SkewMatrix<T>& a) {
  const std::size_t n = a.size();
  Matrix<T> b(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const T sub = pfaffian_laplace(remove_row_col_pair(a, i, j));
      const bool negative = i < j ? (i + j) % 2 == 1 : (i + j + 1) % 2 == 1;
      b(i - 1, j - 1) = negative ? -sub : sub;
    }
  }
  return b;
}

struct JacobiReport {
  bool passed = false;
  Polynomial lhs;  ///< d/dt pf(A(t))
  Polynomial rhs;  ///< tr(A'(t) Padj(A(t))) / 2
};

/// With A(t) = tJ + A over Q[...][t], compares d/dt pf(A(t)) (via the
/// matchings sum) against tr(A'(t) Padj(A(t))) / 2 (via the entrywise
/// Pfaff-adjugate). Exact comparison; diagnostic only.
inline JacobiReport jacobi_pfaffian_check(const SkewMatrix<Polynomial>& a, JForm form) {
  const std::size_t n = a.size();
  std::vector<Variable> used;
  for (const Polynomial& p : a.matrix().entries())
    for (const Variable& v : p.variables()) used.push_back(v);
  std::string name = "t";
  while (std::find(used.begin(), used.end(), Variable(name)) != used.end()) name += "_";
  const Variable t(name);

  const Matrix<Polynomial> j = j_matrix<Polynomial>(form, n).matrix();
  const auto at = SkewMatrix<Polynomial>::validate(scalar_multiply(Polynomial(t), j) + a.matrix());
  const Matrix<Polynomial> at_dot =
      map_entries<Polynomial>(at.matrix(), [&](const Polynomial& p) { return formal_derivative(p, t); });

  JacobiReport report;
  report.lhs = formal_derivative(pfaffian_matchings(at, {.override_cap = true}), t);
  report.rhs = divide_by_integer(trace(mat_mul(at_dot, pfaff_adjugate_entrywise(at))), 2);
  report.passed = report.lhs == report.rhs;
  return report;
}

inline JacobiReport jacobi_pfaffian_check(const SkewMatrix<Rational>& a, JForm form) {
  return jacobi_pfaffian_check(
      SkewMatrix<Polynomial>::validate(
          map_entries<Polynomial>(a.matrix(), [](const Rational& q) { return Polynomial(q); })),
      form);
}

/// Psi(t) = sum_j c_{m-j} t^j as a polynomial in t.
template <QAlgebra T>
  requires std::same_as<T, Rational> || std::same_as<T, RationalizedInteger> ||
           std::same_as<T, Polynomial>
Polynomial psi_polynomial(const PfaffianResult<T>& r, const Variable& t) {
  Polynomial psi;
  const std::size_t m = r.psi_coefficients.empty() ? 0 : r.psi_coefficients.size() - 1;
  for (std::size_t j = 0; j <= m && !r.psi_coefficients.empty(); ++j) {
    const T& coef = r.psi_coefficients[m - j];
    Polynomial c;
    if constexpr (std::same_as<T, Polynomial>) c = coef;
    else if constexpr (std::same_as<T, RationalizedInteger>) c = Polynomial(coef.rational());
    else c = Polynomial(coef);
    psi += c * Polynomial(Monomial(t, static_cast<unsigned>(j)), Rational(1));
  }
  return psi;
}

}  // namespace pfl
