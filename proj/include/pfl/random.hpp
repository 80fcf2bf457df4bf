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

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "pfl/matrix.hpp"
#include "pfl/ring.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

/// Reproducible test matrices. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; each integer entry is
/// (x mod 19) - 9 for the next raw output x, so any language can replay it.
class SkewIntegerGenerator {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64-mod19";

  explicit SkewIntegerGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [-9, 9].
  std::int64_t next_entry() { return static_cast<std::int64_t>(engine_() % 19) - 9; }

  /// Uniform in [-1, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
  }

  /// Dense matrix with entries in [-9, 9], row-major draw order.
  template <QAlgebra T>
  Matrix<T> square(std::size_t n) {
    Matrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = from_integer<T>(next_entry());
    return m;
  }

  /// A - A^T for A = square(n); entries in [-18, 18].
  template <QAlgebra T>
  SkewMatrix<T> skew(std::size_t n) {
    const Matrix<T> a = square<T>(n);
    return SkewMatrix<T>::validate(a - transpose(a));
  }

  /// A - A^T for A with entries uniform in [-1, 1) / sqrt(n), which keeps
  /// Pfaffians of large float matrices inside double range.
  SkewMatrix<double> float_skew(std::size_t n) {
    const double scale = n == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(n));
    Matrix<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = next_unit() * scale;
    return SkewMatrix<double>::validate(a - transpose(a));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pfl
