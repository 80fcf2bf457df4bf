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

// The commutative Q-algebra contract every algorithm in pfl is generic over.
//
// A ring element type T participates by specializing RingTraits<T> with
//
//   static constexpr bool is_exact;
//   static T from_integer(std::int64_t k);
//   static T divide_by_integer(const T& x, std::int64_t k);   // k != 0
//   static bool is_zero(const T& x);
//   static void admit(const T& x);   // throws ValidationError
//
// and by providing the usual value operators (+, -, *, unary -, ==).
// Only division by nonzero integers is ever required, which keeps rings
// without general division (polynomials, even exterior forms) admissible.

#include <concepts>
#include <cstdint>
#include <functional>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfl {

template <typename T>
struct RingTraits;

template <typename T>
concept QAlgebra = std::regular<T> &&
    requires(const T& a, const T& b, std::int64_t k) {
      { a + b } -> std::convertible_to<T>;
      { a - b } -> std::convertible_to<T>;
      { a * b } -> std::convertible_to<T>;
      { -a } -> std::convertible_to<T>;
      { RingTraits<T>::is_exact } -> std::convertible_to<bool>;
      { RingTraits<T>::from_integer(k) } -> std::same_as<T>;
      { RingTraits<T>::divide_by_integer(a, k) } -> std::same_as<T>;
      { RingTraits<T>::is_zero(a) } -> std::same_as<bool>;
      RingTraits<T>::admit(a);
    };

template <QAlgebra T>
inline constexpr bool is_exact_ring_v = RingTraits<T>::is_exact;

template <QAlgebra T>
T from_integer(std::int64_t k) {
  return RingTraits<T>::from_integer(k);
}

template <QAlgebra T>
T zero() {
  return RingTraits<T>::from_integer(0);
}

template <QAlgebra T>
T one() {
  return RingTraits<T>::from_integer(1);
}

/// Returns y with k*y == x. Throws std::invalid_argument for k == 0.
template <QAlgebra T>
T divide_by_integer(const T& x, std::int64_t k) {
  if (k == 0) throw std::invalid_argument("divide_by_integer: division by zero");
  return RingTraits<T>::divide_by_integer(x, k);
}

template <QAlgebra T>
bool is_zero(const T& x) {
  return RingTraits<T>::is_zero(x);
}

struct AxiomReport {
  bool passed = true;
  std::vector<std::string> failures;
};

/// Checks commutativity, associativity and distributivity on every ordered
/// triple of samples, plus the integer homomorphism and the
/// divide_by_integer round trip. Reports, never throws.
///
/// `equal` decides element equality; exact rings use ==, float callers pass
/// a tolerance-aware comparison.
template <typename T, typename Equal = std::equal_to<T>>
  requires QAlgebra<T>
AxiomReport ring_axiom_check(std::span<const T> samples, Equal equal = {}) {
  AxiomReport report;
  auto fail = [&](std::string what, std::size_t i, std::size_t j, std::size_t k) {
    report.passed = false;
    std::ostringstream os;
    os << what << " failed on samples (" << i << ", " << j << ", " << k << ")";
    report.failures.push_back(os.str());
  };
  if (samples.size() < 3) {
    report.passed = false;
    report.failures.emplace_back("ring_axiom_check needs at least 3 samples");
    return report;
  }
  const T zero_v = zero<T>();
  const T one_v = one<T>();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const T& a = samples[i];
    if (!equal(a + zero_v, a)) fail("additive identity", i, i, i);
    if (!equal(a * one_v, a)) fail("multiplicative identity", i, i, i);
    if (!equal(a + (-a), zero_v)) fail("additive inverse", i, i, i);
    for (std::int64_t k : {1, 2, 3, -5, 7}) {
      if (!equal(divide_by_integer(a, k) * from_integer<T>(k), a))
        fail("divide_by_integer(" + std::to_string(k) + ") round trip", i, i, i);
    }
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const T& b = samples[j];
      if (!equal(a + b, b + a)) fail("additive commutativity", i, j, j);
      if (!equal(a * b, b * a)) fail("multiplicative commutativity", i, j, j);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const T& c = samples[k];
        if (!equal((a + b) + c, a + (b + c))) fail("additive associativity", i, j, k);
        if (!equal((a * b) * c, a * (b * c))) fail("multiplicative associativity", i, j, k);
        if (!equal(a * (b + c), a * b + a * c)) fail("distributivity", i, j, k);
      }
    }
  }
  for (std::int64_t p : {-4, -1, 0, 3, 11}) {
    for (std::int64_t q : {-2, 0, 5}) {
      if (!equal(from_integer<T>(p) + from_integer<T>(q), from_integer<T>(p + q)) ||
          !equal(from_integer<T>(p) * from_integer<T>(q), from_integer<T>(p * q))) {
        report.passed = false;
        report.failures.push_back("from_integer is not a homomorphism at (" +
                                  std::to_string(p) + ", " + std::to_string(q) + ")");
      }
    }
  }
  return report;
}

}  // namespace pfl
