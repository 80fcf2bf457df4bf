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

#include <gtest/gtest.h>

#include <map>

#include "pfl/polynomial.hpp"

namespace pfl {
namespace {

Polynomial P(std::string_view s) { return Polynomial::parse(s); }

TEST(Polynomial, DifferenceOfSquares) {
  const Polynomial x = Polynomial::variable("x");
  EXPECT_EQ((x + Polynomial(1)) * (x - Polynomial(1)), P("x^2 - 1"));
}

TEST(Polynomial, AddZeroIsIdentity) {
  const Polynomial p = P("3*x*y - 1/2*z^2 + 7");
  EXPECT_EQ(p + Polynomial(), p);
}

TEST(Polynomial, GenericFourByFourPfaffianTerms) {
  const Polynomial sum = P("a_1_2*a_3_4") + P("a_2_3*a_1_4") - P("a_2_4*a_1_3");
  EXPECT_EQ(sum.terms().size(), 3U);
  EXPECT_EQ(sum, P("a_1_2*a_3_4 - a_1_3*a_2_4 + a_1_4*a_2_3"));
}

TEST(Polynomial, DisjointVariableSetsTakeUnion) {
  const Polynomial p = P("x") * P("y") + P("z");
  EXPECT_EQ(p.variables().size(), 3U);
}

TEST(FormalDerivative, Cube) {
  EXPECT_EQ(formal_derivative(P("t^3"), Variable("t")), P("3*t^2"));
}

TEST(FormalDerivative, Constant) {
  EXPECT_TRUE(formal_derivative(P("5"), Variable("t")).is_zero());
}

TEST(FormalDerivative, GeneralPolynomialInT) {
  EXPECT_EQ(formal_derivative(P("2*t^3 + 5*t^2 - t + 4"), Variable("t")), P("6*t^2 + 10*t - 1"));
}

TEST(Evaluate, AtThree) {
  EXPECT_EQ(evaluate<Rational>(P("x^2 - 1"), {{Variable("x"), Rational(3)}}), Rational(8));
}

TEST(Evaluate, ZeroAssignmentGivesConstantTerm) {
  const Polynomial p = P("x*y + 3*x - 7/2");
  EXPECT_EQ(evaluate<Rational>(p, {{Variable("x"), Rational(0)}, {Variable("y"), Rational(0)}}), p.constant_term());
}

TEST(Evaluate, MissingVariableThrows) {
  EXPECT_THROW(evaluate<Rational>(P("x*y"), {{Variable("x"), Rational(1)}}), std::invalid_argument);
}

TEST(Polynomial, CanonicalTextAndParse) {
  const Polynomial p = P("-x + x^2*y - 2/3");
  EXPECT_EQ(P(p.to_string()), p);
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("x ^"), ParseError);
}

TEST(Variable, Interned) {
  EXPECT_EQ(Variable("a_1_2"), Variable(std::string("a_1_") + "2"));
}

}  // namespace
}  // namespace pfl
