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

// Scalar instances of the ring contract: exact rationals, integers viewed
// inside their rationalization, and machine floats.

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/ring.hpp"

namespace pfl {

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline mpz_class parse_mpz(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer literal: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

inline mpz_class mpz_from_int64(std::int64_t k) {
  // mpz_class(long) is 64-bit on LP64 targets; go through a string otherwise.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(k));
  } else {
    return mpz_class(std::to_string(k), 10);
  }
}

}  // namespace detail

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t k) : q_(detail::mpz_from_int64(k)) {}  // NOLINT: implicit by design of literals
  explicit Rational(const mpz_class& k) : q_(k) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational divided_by(std::int64_t k) const {
    if (k == 0) throw std::invalid_argument("divide_by_integer: division by zero");
    mpq_class d(detail::mpz_from_int64(k));
    return Rational(mpq_class(q_ / d));
  }

  Rational inverse() const {
    if (q_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / q_));
  }

  /// Square root when both numerator and denominator are perfect squares.
  std::optional<Rational> exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(numerator().get_mpz_t()) ||
        !mpz_perfect_square_p(denominator().get_mpz_t()))
      return std::nullopt;
    return Rational(sqrt(numerator()), sqrt(denominator()));
  }

  /// "p" or "p/q".
  std::string to_string() const {
    std::string s = numerator().get_str(10);
    if (!is_integer()) s += "/" + denominator().get_str(10);
    return s;
  }

  static Rational parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_mpz(s));
    const std::string_view den = s.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
      throw ParseError("rational denominator must be unsigned: '" + std::string(s) + "'");
    const mpz_class d = detail::parse_mpz(den);
    if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(s) + "'");
    return Rational(detail::parse_mpz(s.substr(0, slash)), d);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

template <>
struct RingTraits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_integer(std::int64_t k) { return Rational(k); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational divide_by_integer(const Rational& x, std::int64_t k) { return x.divided_by(k); }
  static bool is_zero(const Rational& x) { return x.sign() == 0; }
  static void admit(const Rational&) {}

  /// Right factor of a matrix product brought to a common denominator.
  struct ProductOperand {
    std::vector<mpz_class> numerators;  // row-major
    mpz_class denominator;
  };

  static ProductOperand prepare_right(std::span<const Rational> b) {
    ProductOperand op{{}, 1};
    for (const Rational& x : b)
      if (x.denominator() != 1) mpz_lcm(op.denominator.get_mpz_t(), op.denominator.get_mpz_t(),
                                         x.denominator().get_mpz_t());
    op.numerators.reserve(b.size());
    for (const Rational& x : b) {
      if (op.denominator == 1) op.numerators.push_back(x.numerator());
      else op.numerators.push_back(x.numerator() * (op.denominator / x.denominator()));
    }
    return op;
  }

  /// out = a_row * B, summing integer numerators and reducing once per entry.
  static void multiply_row(std::span<const Rational> a_row, const ProductOperand& b,
                           std::span<Rational> out) {
    const std::size_t n = out.size();
    mpz_class row_den = 1;
    for (const Rational& x : a_row)
      if (x.denominator() != 1) mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<mpz_class> acc(n);
    mpz_class scaled;
    for (std::size_t k = 0; k < a_row.size(); ++k) {
      const Rational& aik = a_row[k];
      if (aik.sign() == 0) continue;
      const mpz_class* coef = &aik.numerator();
      if (row_den != 1) {
        scaled = aik.numerator() * (row_den / aik.denominator());
        coef = &scaled;
      }
      const mpz_class* brow = b.numerators.data() + k * n;
      for (std::size_t j = 0; j < n; ++j)
        mpz_addmul(acc[j].get_mpz_t(), coef->get_mpz_t(), brow[j].get_mpz_t());
    }
    const mpz_class den = row_den * b.denominator;
    for (std::size_t j = 0; j < n; ++j)
      out[j] = den == 1 ? Rational(acc[j]) : Rational(acc[j], den);
  }
};

/// An integer computed with inside Q. Arithmetic is rational; reading the
/// value back out with integer() insists on a unit denominator, which is
/// how integral results (charpoly coefficients, Pfaffians of integer
/// matrices) are demoted.
class RationalizedInteger {
 public:
  RationalizedInteger() = default;
  RationalizedInteger(std::int64_t k) : q_(k) {}  // NOLINT
  explicit RationalizedInteger(const mpz_class& k) : q_(k) {}
  explicit RationalizedInteger(Rational q) : q_(std::move(q)) {}

  const Rational& rational() const { return q_; }
  bool is_integral() const { return q_.is_integer(); }

  mpz_class integer() const {
    if (!q_.is_integer())
      throw ConsistencyError("integer-ring value " + q_.to_string() + " has a non-unit denominator");
    return q_.numerator();
  }

  RationalizedInteger operator-() const { return RationalizedInteger(-q_); }
  friend RationalizedInteger operator+(const RationalizedInteger& a, const RationalizedInteger& b) {
    return RationalizedInteger(a.q_ + b.q_);
  }
  friend RationalizedInteger operator-(const RationalizedInteger& a, const RationalizedInteger& b) {
    return RationalizedInteger(a.q_ - b.q_);
  }
  friend RationalizedInteger operator*(const RationalizedInteger& a, const RationalizedInteger& b) {
    return RationalizedInteger(a.q_ * b.q_);
  }
  RationalizedInteger& operator+=(const RationalizedInteger& o) { q_ += o.q_; return *this; }
  RationalizedInteger& operator-=(const RationalizedInteger& o) { q_ -= o.q_; return *this; }
  RationalizedInteger& operator*=(const RationalizedInteger& o) { q_ *= o.q_; return *this; }
  friend bool operator==(const RationalizedInteger&, const RationalizedInteger&) = default;

  std::string to_string() const { return integer().get_str(10); }

  static RationalizedInteger parse(std::string_view s) {
    return RationalizedInteger(detail::parse_mpz(s));
  }

 private:
  Rational q_;
};

template <>
struct RingTraits<RationalizedInteger> {
  static constexpr bool is_exact = true;
  static RationalizedInteger from_integer(std::int64_t k) { return RationalizedInteger(k); }
  static RationalizedInteger from_rational(const Rational& q) { return RationalizedInteger(q); }
  static RationalizedInteger divide_by_integer(const RationalizedInteger& x, std::int64_t k) {
    return RationalizedInteger(x.rational().divided_by(k));
  }
  static bool is_zero(const RationalizedInteger& x) { return x.rational().sign() == 0; }
  static void admit(const RationalizedInteger&) {}

  using ProductOperand = RingTraits<Rational>::ProductOperand;

  static ProductOperand prepare_right(std::span<const RationalizedInteger> b) {
    std::vector<Rational> q;
    q.reserve(b.size());
    for (const auto& x : b) q.push_back(x.rational());
    return RingTraits<Rational>::prepare_right(q);
  }

  static void multiply_row(std::span<const RationalizedInteger> a_row, const ProductOperand& b,
                           std::span<RationalizedInteger> out) {
    std::vector<Rational> a(a_row.size()), c(out.size());
    for (std::size_t k = 0; k < a_row.size(); ++k) a[k] = a_row[k].rational();
    RingTraits<Rational>::multiply_row(a, b, c);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = RationalizedInteger(std::move(c[j]));
  }
};

template <>
struct RingTraits<double> {
  static constexpr bool is_exact = false;
  static double from_integer(std::int64_t k) { return static_cast<double>(k); }
  static double from_rational(const Rational& q) { return q.to_double(); }
  static double divide_by_integer(double x, std::int64_t k) { return x / static_cast<double>(k); }
  static bool is_zero(double x) { return x == 0.0; }
  static void admit(double x) {
    if (!std::isfinite(x)) throw ValidationError("non-finite float entry");
  }
};

/// |a - b| <= tolerance * max(1, |a|, |b|).
inline bool approx_equal(double a, double b, double tolerance) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tolerance * scale;
}

inline std::string to_text(const Rational& x) { return x.to_string(); }
inline std::string to_text(const RationalizedInteger& x) { return x.to_string(); }

/// Shortest decimal form that parses back to the same double.
inline std::string to_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_float(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("not a float literal: '" + std::string(s) + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite float literal: '" + std::string(s) + "'");
  return v;
}

/// Coefficient-field operations used by the Euler form's Gram correction.
inline std::optional<Rational> field_sqrt(const Rational& x) { return x.exact_sqrt(); }
inline std::optional<double> field_sqrt(double x) {
  if (!(x > 0.0)) return x == 0.0 ? std::optional<double>(0.0) : std::nullopt;
  return std::sqrt(x);
}
inline Rational field_inverse(const Rational& x) { return x.inverse(); }
inline double field_inverse(double x) {
  if (x == 0.0) throw std::domain_error("inverse of zero");
  return 1.0 / x;
}
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

}  // namespace pfl
