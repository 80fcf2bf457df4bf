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

// Exterior algebra over a scalar coefficient field, with basis blades stored
// as bitmasks (bit i-1 set <=> e_i present). Dimension is capped at 64.
//
// Form elements of any degree can be built and wedged. Only even-degree
// elements are admitted as ring elements of a matrix, since the even part is
// the commutative Q-algebra the Pfaffian algorithms need.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/ring.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

using Blade = std::uint64_t;

inline constexpr unsigned kMaxFormDimension = 64;

/// Orders blades by grade, then lexicographically by sorted index tuple.
struct BladeOrder {
  bool operator()(Blade a, Blade b) const {
    const int ga = std::popcount(a);
    const int gb = std::popcount(b);
    if (ga != gb) return ga < gb;
    if (a == b) return false;
    // Equal grade: the tuple holding the lowest differing index sorts first.
    const Blade diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  }
};

/// Sign of e_I ^ e_J for disjoint blades: (-1)^#{(i, j) : i in I, j in J, i > j}.
inline int wedge_sign(Blade lhs, Blade rhs) {
  unsigned swaps = 0;
  while (rhs != 0) {
    const int j = std::countr_zero(rhs);
    rhs &= rhs - 1;
    const Blade above = j >= 63 ? 0 : (~Blade{0} << (j + 1));
    swaps += static_cast<unsigned>(std::popcount(lhs & above));
  }
  return (swaps & 1U) ? -1 : 1;
}

template <typename S>
class Form {
 public:
  using Terms = std::map<Blade, S, BladeOrder>;

  /// The zero form, compatible with every dimension.
  Form() = default;

  /// A degree-0 element. Dimension 0 means "scalar, fits any dimension".
  static Form scalar(const S& c, unsigned dimension = 0) {
    Form f(dimension);
    f.add_term(0, c);
    return f;
  }

  /// e_i, 1-based.
  static Form covector(unsigned dimension, unsigned i) {
    return blade(dimension, {i});
  }

  /// c * e_{i1} ^ e_{i2} ^ ..., indices 1-based in any order.
  static Form blade(unsigned dimension, const std::vector<unsigned>& indices, const S& c = S(1)) {
    Form f(dimension);
    Form acc = scalar(c, dimension);
    for (unsigned i : indices) {
      if (i < 1 || i > dimension)
        throw std::invalid_argument("Form::blade: index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(dimension));
      Form e(dimension);
      e.add_term(Blade{1} << (i - 1), S(1));
      acc = acc * e;
    }
    f += acc;
    return f;
  }

  unsigned dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when every term has even grade.
  bool is_even() const {
    for (const auto& [b, c] : terms_)
      if (std::popcount(b) % 2 != 0) return false;
    return true;
  }

  /// Grade of a homogeneous nonzero form, -1 otherwise.
  int homogeneous_degree() const {
    int deg = -1;
    for (const auto& [b, c] : terms_) {
      const int g = std::popcount(b);
      if (deg == -1) deg = g;
      else if (deg != g) return -1;
    }
    return deg;
  }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  Form grade_project(unsigned k) const {
    Form out(dimension_);
    for (const auto& [b, c] : terms_)
      if (static_cast<unsigned>(std::popcount(b)) == k) out.terms_.emplace(b, c);
    return out;
  }

  /// Coefficient of e_1 ^ ... ^ e_n for n = dimension().
  S top_coefficient() const {
    const Blade top = dimension_ >= 64 ? ~Blade{0} : ((Blade{1} << dimension_) - 1);
    return coefficient(top);
  }

  Form with_dimension(unsigned dimension) const {
    Form out = *this;
    out.dimension_ = merge_dimension(dimension_, dimension);
    return out;
  }

  Form operator-() const {
    Form out = *this;
    for (auto& [b, c] : out.terms_) c = -c;
    return out;
  }

  Form& operator+=(const Form& o) {
    dimension_ = merge_dimension(dimension_, o.dimension_);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    dimension_ = merge_dimension(dimension_, o.dimension_);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  /// Wedge product.
  friend Form operator*(const Form& a, const Form& b) {
    Form out(merge_dimension(a.dimension_, b.dimension_));
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        if ((ba & bb) != 0) continue;
        const S prod = ca * cb;
        out.add_term(ba | bb, wedge_sign(ba, bb) < 0 ? -prod : prod);
      }
    }
    return out;
  }

  Form scaled(const S& s) const {
    Form out(dimension_);
    for (const auto& [b, c] : terms_) out.add_term(b, c * s);
    return out;
  }

  /// Terms compare; dimension is metadata.
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  /// "c * e_i^e_j" terms joined by " + "; a degree-0 term is just "c".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += to_text(c);
      if (b != 0) {
        s += " * ";
        bool first = true;
        for (Blade rest = b; rest != 0; rest &= rest - 1) {
          if (!first) s += '^';
          first = false;
          s += "e_" + std::to_string(std::countr_zero(rest) + 1);
        }
      }
    }
    return s;
  }

 private:
  explicit Form(unsigned dimension) : dimension_(dimension) {
    if (dimension > kMaxFormDimension)
      throw std::invalid_argument("Form: dimension above " + std::to_string(kMaxFormDimension));
  }

  static unsigned merge_dimension(unsigned a, unsigned b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw std::invalid_argument("Form: dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }

  void add_term(Blade b, const S& c) {
    if (RingTraits<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (RingTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  unsigned dimension_ = 0;
  Terms terms_;
};

/// Wedge product; throws std::invalid_argument on dimension mismatch.
template <typename S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  return a * b;
}

template <typename S>
Form<S> grade_project(const Form<S>& a, unsigned k) {
  return a.grade_project(k);
}

template <typename S>
S top_coefficient(const Form<S>& a) {
  return a.top_coefficient();
}

template <typename S>
struct RingTraits<Form<S>> {
  static constexpr bool is_exact = RingTraits<S>::is_exact;
  static Form<S> from_integer(std::int64_t k) {
    return Form<S>::scalar(RingTraits<S>::from_integer(k));
  }
  static Form<S> from_rational(const Rational& q) {
    return Form<S>::scalar(RingTraits<S>::from_rational(q));
  }
  static Form<S> divide_by_integer(const Form<S>& x, std::int64_t k) {
    return x.scaled(RingTraits<S>::divide_by_integer(S(1), k));
  }
  static bool is_zero(const Form<S>& x) { return x.is_zero(); }
  static void admit(const Form<S>& x) {
    if (!x.is_even())
      throw ValidationError("odd-degree form '" + x.to_string() +
                            "' is not an element of the even exterior ring");
  }
};

template <typename S>
std::string to_text(const Form<S>& f) {
  return f.to_string();
}

/// Parses the to_string() format: terms "c" or "c * e_i^e_j^..." joined by
/// "+". Coefficients use the scalar's own text form.
template <typename S, typename ScalarParse>
Form<S> parse_form(std::string_view text, unsigned dimension, ScalarParse parse_scalar) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto bad = [&](const std::string& why) {
    return ParseError("form '" + std::string(text) + "': " + why);
  };
  Form<S> result = Form<S>::scalar(S(0), dimension);
  std::string_view rest = trim(text);
  if (rest.empty()) throw bad("empty");
  if (rest == "0") return result;
  while (!rest.empty()) {
    // Split on " + " only; a '+' inside a coefficient literal never has spaces.
    std::size_t cut = rest.find(" + ");
    std::string_view term = trim(rest.substr(0, cut));
    rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 3);
    if (term.empty()) throw bad("empty term");
    std::string_view coef = term;
    std::vector<unsigned> indices;
    if (const std::size_t star = term.find('*'); star != std::string_view::npos) {
      coef = trim(term.substr(0, star));
      std::string_view basis = trim(term.substr(star + 1));
      while (!basis.empty()) {
        const std::size_t caret = basis.find('^');
        std::string_view e = trim(basis.substr(0, caret));
        basis = caret == std::string_view::npos ? std::string_view{} : basis.substr(caret + 1);
        if (e.size() < 3 || e.substr(0, 2) != "e_") throw bad("expected e_<index>, got '" + std::string(e) + "'");
        const std::string digits(e.substr(2));
        if (!detail::is_integer_literal(digits) || digits.front() == '-' || digits.front() == '+')
          throw bad("bad basis index '" + digits + "'");
        const unsigned long idx = std::stoul(digits);
        if (idx < 1 || idx > dimension) throw bad("basis index " + digits + " outside 1.." + std::to_string(dimension));
        indices.push_back(static_cast<unsigned>(idx));
      }
      if (indices.empty()) throw bad("missing basis covectors after '*'");
    }
    const S c = parse_scalar(coef);
    std::vector<unsigned> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw bad("repeated basis index");
    result += Form<S>::blade(dimension, indices, c);
  }
  return result;
}

}  // namespace pfl
