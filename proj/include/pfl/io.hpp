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

// Line-oriented matrix file format:
//
//   ring <tag>            tag: rational | integer | float | polynomial | exterior:<n>
//   size <n>
//   <n rows of n entries>
//   [gram]                optional: n rows of scalar entries follow
//   [volume <float>]      optional
//
// Entries are whitespace separated; an entry containing whitespace is
// written in double quotes (exterior entries are always quoted). Blank lines
// and lines starting with '#' are ignored.

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/exterior.hpp"
#include "pfl/matrix.hpp"
#include "pfl/polynomial.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

enum class RingKind { rational, integer, floating, polynomial, exterior };

struct RingSpec {
  RingKind kind = RingKind::rational;
  unsigned dimension = 0;  ///< exterior only

  std::string tag() const {
    switch (kind) {
      case RingKind::rational: return "rational";
      case RingKind::integer: return "integer";
      case RingKind::floating: return "float";
      case RingKind::polynomial: return "polynomial";
      case RingKind::exterior: return "exterior:" + std::to_string(dimension);
    }
    return "?";
  }

  static RingSpec parse(std::string_view tag) {
    if (tag == "rational") return {RingKind::rational};
    if (tag == "integer") return {RingKind::integer};
    if (tag == "float") return {RingKind::floating};
    if (tag == "polynomial") return {RingKind::polynomial};
    if (tag.starts_with("exterior:")) {
      const std::string_view digits = tag.substr(9);
      unsigned dim = 0;
      const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
      if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() || dim == 0 ||
          dim > kMaxFormDimension)
        throw ParseError("bad exterior dimension in ring tag '" + std::string(tag) + "'");
      return {RingKind::exterior, dim};
    }
    throw ParseError("unknown ring tag '" + std::string(tag) + "'");
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Entry text codecs, one per ring element type.
template <typename T>
struct EntryCodec;

template <>
struct EntryCodec<Rational> {
  static Rational parse(std::string_view s, const RingSpec&) { return Rational::parse(s); }
  static std::string format(const Rational& x) { return x.to_string(); }
};

template <>
struct EntryCodec<RationalizedInteger> {
  static RationalizedInteger parse(std::string_view s, const RingSpec&) {
    return RationalizedInteger::parse(s);
  }
  static std::string format(const RationalizedInteger& x) { return x.to_string(); }
};

template <>
struct EntryCodec<double> {
  static double parse(std::string_view s, const RingSpec&) { return parse_float(s); }
  static std::string format(double x) { return to_text(x); }
};

template <>
struct EntryCodec<Polynomial> {
  static Polynomial parse(std::string_view s, const RingSpec&) { return Polynomial::parse(s); }
  static std::string format(const Polynomial& x) { return x.to_string(); }
};

template <>
struct EntryCodec<Form<Rational>> {
  static Form<Rational> parse(std::string_view s, const RingSpec& spec) {
    return parse_form<Rational>(s, spec.dimension, [](std::string_view c) { return Rational::parse(c); });
  }
  static std::string format(const Form<Rational>& x) { return x.to_string(); }
};

/// Raw contents of a matrix file, entries still as text.
struct MatrixFile {
  RingSpec ring;
  std::size_t size = 0;
  std::vector<std::string> entries;  ///< row-major, size*size
  std::optional<std::vector<std::string>> gram;
  std::optional<double> volume;
};

namespace detail {

inline std::vector<std::string> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos)
        throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
      tokens.emplace_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.emplace_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

inline bool needs_quotes(std::string_view s) {
  return s.empty() || s.find_first_of(" \t") != std::string_view::npos;
}

}  // namespace detail

inline MatrixFile read_matrix_file(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view view(raw);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    lines.emplace_back(line_no, detail::tokenize_line(view, line_no));
  }
  auto err = [](std::size_t ln, const std::string& what) {
    return ParseError("line " + std::to_string(ln) + ": " + what);
  };

  std::size_t cur = 0;
  auto expect_header = [&](const char* key) -> const std::string& {
    if (cur >= lines.size()) throw ParseError(std::string("missing '") + key + "' line");
    const auto& [ln, toks] = lines[cur];
    if (toks.size() != 2 || toks[0] != key)
      throw err(ln, std::string("expected '") + key + " <value>'");
    ++cur;
    return toks[1];
  };

  MatrixFile file;
  file.ring = RingSpec::parse(expect_header("ring"));
  const std::string& size_text = expect_header("size");
  {
    const auto res = std::from_chars(size_text.data(), size_text.data() + size_text.size(), file.size);
    if (res.ec != std::errc() || res.ptr != size_text.data() + size_text.size())
      throw err(lines[cur - 1].first, "bad size '" + size_text + "'");
  }

  auto read_rows = [&](std::vector<std::string>& out, const char* what) {
    out.reserve(file.size * file.size);
    for (std::size_t r = 0; r < file.size; ++r) {
      if (cur >= lines.size())
        throw ParseError(std::string(what) + ": expected " + std::to_string(file.size) + " rows, got " +
                         std::to_string(r));
      const auto& [ln, toks] = lines[cur++];
      if (toks.size() != file.size)
        throw err(ln, std::string(what) + " row has " + std::to_string(toks.size()) +
                          " entries, expected " + std::to_string(file.size));
      out.insert(out.end(), toks.begin(), toks.end());
    }
  };
  read_rows(file.entries, "matrix");

  while (cur < lines.size()) {
    const auto& [ln, toks] = lines[cur];
    if (toks.size() == 1 && toks[0] == "gram") {
      if (file.gram) throw err(ln, "duplicate gram section");
      ++cur;
      file.gram.emplace();
      read_rows(*file.gram, "gram");
    } else if (toks.size() == 2 && toks[0] == "volume") {
      if (file.volume) throw err(ln, "duplicate volume line");
      file.volume = parse_float(toks[1]);
      ++cur;
    } else {
      throw err(ln, "unexpected content after matrix");
    }
  }
  return file;
}

inline MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix_file(in);
}

inline MatrixFile parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_file(in);
}

/// Parses the raw entries as ring elements and admits them.
template <QAlgebra T>
Matrix<T> entries_as(const std::vector<std::string>& raw, std::size_t n, const RingSpec& spec) {
  std::vector<T> values;
  values.reserve(raw.size());
  for (const std::string& s : raw) {
    T v = EntryCodec<T>::parse(s, spec);
    RingTraits<T>::admit(v);
    values.push_back(std::move(v));
  }
  return Matrix<T>(n, std::move(values));
}

template <QAlgebra T>
Matrix<T> matrix_as(const MatrixFile& file) {
  return entries_as<T>(file.entries, file.size, file.ring);
}

/// Canonical text of a matrix; parsing it back and formatting again
/// reproduces it byte for byte for exact rings.
template <QAlgebra T>
std::string format_matrix(const RingSpec& spec, const Matrix<T>& m) {
  std::string out = "ring " + spec.tag() + "\nsize " + std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      const std::string s = EntryCodec<T>::format(m(i, j));
      if (spec.kind == RingKind::exterior || detail::needs_quotes(s)) out += '"' + s + '"';
      else out += s;
    }
    out += '\n';
  }
  return out;
}

}  // namespace pfl
