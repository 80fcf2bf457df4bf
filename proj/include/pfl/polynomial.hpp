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

// Sparse multivariate polynomials over Q, used as a ring element type so the
// matrix algorithms can run fully symbolically.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/ring.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

/// Interned variable name. Equality is identity of the interned string;
/// ordering is lexicographic on the name.
class Variable {
 public:
  explicit Variable(std::string_view name) : name_(intern(name)) {}

  const std::string& name() const { return *name_; }

  friend bool operator==(const Variable& a, const Variable& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

 private:
  static const std::string* intern(std::string_view name) {
    static std::mutex mutex;
    static std::unordered_set<std::string> table;
    if (name.empty()) throw std::invalid_argument("Variable: empty name");
    std::lock_guard lock(mutex);
    return &*table.emplace(name).first;
  }

  const std::string* name_;
};

/// Product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned exponent = 1) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  unsigned exponent(const Variable& v) const {
    for (const auto& [var, e] : factors_)
      if (var == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first == j->first) {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      } else if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else {
        out.factors_.push_back(*j++);
      }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
  }

  /// Lowers the exponent of v by one. Precondition: exponent(v) > 0.
  Monomial without_one(const Variable& v) const {
    Monomial out;
    for (const auto& [var, e] : factors_) {
      if (var == v) {
        if (e > 1) out.factors_.emplace_back(var, e - 1);
      } else {
        out.factors_.emplace_back(var, e);
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [var, e] : factors_) {
      if (!s.empty()) s += '*';
      s += var.name();
      if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, largest first: higher total degree first,
/// then the monomial with the larger exponent on the smallest variable.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
      if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
      if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return fa.size() > fb.size();
  }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  Polynomial() = default;
  Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c) {  // NOLINT
    if (c.sign() != 0) terms_.emplace(Monomial(), c);
  }
  explicit Polynomial(Variable v) { terms_.emplace(Monomial(v), Rational(1)); }
  Polynomial(const Monomial& m, const Rational& c) {
    if (c.sign() != 0) terms_.emplace(m, c);
  }

  static Polynomial variable(std::string_view name) { return Polynomial(Variable(name)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of v^k as a polynomial in the remaining variables.
  Polynomial coefficient(const Variable& v, unsigned k) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.exponent(v) != k) continue;
      Monomial rest = m;
      for (unsigned i = 0; i < k; ++i) rest = rest.without_one(v);
      out.add_term(rest, c);
    }
    return out;
  }

  unsigned degree_in(const Variable& v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  std::vector<Variable> variables() const {
    std::vector<Variable> vars;
    for (const auto& [m, c] : terms_)
      for (const auto& [var, e] : m.factors()) vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Polynomial scaled(const Rational& s) const {
    if (s.sign() == 0) return {};
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = c * s;
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Terms in TermOrder joined by " + " / " - "; unit coefficients omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      const Rational mag = negative ? -c : c;
      if (m.is_constant()) {
        s += mag.to_string();
      } else {
        if (mag != Rational(1)) s += mag.to_string() + "*";
        s += m.to_string();
      }
    }
    return s;
  }

  static Polynomial parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.sign() == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.sign() == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

template <>
struct RingTraits<Polynomial> {
  static constexpr bool is_exact = true;
  static Polynomial from_integer(std::int64_t k) { return Polynomial(k); }
  static Polynomial from_rational(const Rational& q) { return Polynomial(q); }
  static Polynomial divide_by_integer(const Polynomial& x, std::int64_t k) {
    return x.scaled(Rational(1).divided_by(k));
  }
  static bool is_zero(const Polynomial& x) { return x.is_zero(); }
  static void admit(const Polynomial&) {}
};

inline std::string to_text(const Polynomial& p) { return p.to_string(); }

/// Term-by-term derivative with respect to v.
inline Polynomial formal_derivative(const Polynomial& p, const Variable& v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out += Polynomial(m.without_one(v), c * Rational(static_cast<std::int64_t>(e)));
  }
  return out;
}

/// Substitutes every variable of p by a ring element. Throws
/// std::invalid_argument when a variable of p has no assignment.
template <QAlgebra R>
  requires requires(const Rational& q) { RingTraits<R>::from_rational(q); }
R evaluate(const Polynomial& p, const std::map<Variable, R>& assignment) {
  R total = zero<R>();
  for (const auto& [m, c] : p.terms()) {
    R term = RingTraits<R>::from_rational(c);
    for (const auto& [var, e] : m.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: no value for variable '" + var.name() + "'");
      for (unsigned k = 0; k < e; ++k) term = term * it->second;
    }
    total = total + term;
  }
  return total;
}

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial result;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial t = term();
      result += negative ? -t : t;
    }
    return result;
  }

 private:
  Polynomial term() {
    Polynomial t = factor();
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
      t = t * factor();
    }
    return t;
  }

  Polynomial factor() {
    if (at_end()) fail("expected a factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string_view num = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::string_view den = digits();
        return Polynomial(Rational::parse(std::string(num) + "/" + std::string(den)));
      }
      return Polynomial(Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                           peek() == '\''))
        ++pos_;
      Variable v(text_.substr(start, pos_ - start));
      unsigned e = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        std::string_view ds = digits();
        e = static_cast<unsigned>(std::stoul(std::string(ds)));
        if (e == 0) return Polynomial(1);
      }
      return Polynomial(Monomial(v, e), Rational(1));
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text) {
  return detail::PolynomialParser(text).parse();
}

}  // namespace pfl
