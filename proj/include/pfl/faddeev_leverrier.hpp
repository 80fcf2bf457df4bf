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

// Division-free characteristic polynomial, determinant and adjugate.
//
// With N_1 = I the recursion
//
//   M_k     = A N_k
//   c_k     = -tr(M_k) / k
//   N_{k+1} = M_k + c_k I
//
// yields chi(t) = det(tI - A) = sum_j c_{n-j} t^j. N_n equals
// (-1)^{n+1} adj(A), and N_{n+1} = M_n + c_n I must vanish.

#include <cstdint>
#include <optional>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/matrix.hpp"
#include "pfl/ring.hpp"

namespace pfl {

template <QAlgebra T>
struct CharPolyResult {
  std::vector<T> coefficients;  ///< [c_0, ..., c_n], c_0 = 1
  Matrix<T> adjugate;
  Matrix<T> residual;  ///< N_{n+1}; zero over exact rings
  std::optional<double> residual_max_abs;  ///< filled for double only
};

struct FlOptions {
  unsigned threads = 1;
};

/// Throws ConsistencyError when the residual is nonzero over an exact ring.
/// For doubles the residual is reported in residual_max_abs and never fatal.
template <QAlgebra T>
CharPolyResult<T> char_poly(const Matrix<T>& a, FlOptions options = {}) {
  admit_entries(a);
  const std::size_t n = a.size();
  CharPolyResult<T> result;
  result.coefficients.reserve(n + 1);
  result.coefficients.push_back(one<T>());
  if (n == 0) {
    if constexpr (std::same_as<T, double>) result.residual_max_abs = 0.0;
    return result;
  }

  Matrix<T> big_n = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> m = mat_mul(a, big_n, options.threads);
    const T c = -divide_by_integer(trace(m), static_cast<std::int64_t>(k));
    result.coefficients.push_back(c);
    if (k < n) {
      big_n = add_scaled_identity(std::move(m), c);
    } else {
      result.residual = add_scaled_identity(std::move(m), c);
    }
  }

  // N now holds N_n.
  result.adjugate = (n % 2 == 1) ? std::move(big_n) : -big_n;

  if constexpr (std::same_as<T, double>) {
    result.residual_max_abs = max_abs_entry(result.residual);
  } else if constexpr (is_exact_ring_v<T>) {
    if (!result.residual.is_zero())
      throw ConsistencyError("char_poly: residual N_{n+1} is nonzero over an exact ring");
  }
  return result;
}

/// det(A) = (-1)^n c_n.
template <QAlgebra T>
T determinant(const Matrix<T>& a, FlOptions options = {}) {
  const auto r = char_poly(a, options);
  const T& cn = r.coefficients.back();
  return (a.size() % 2 == 0) ? cn : -cn;
}

template <QAlgebra T>
Matrix<T> adjugate(const Matrix<T>& a, FlOptions options = {}) {
  return char_poly(a, options).adjugate;
}

}  // namespace pfl
