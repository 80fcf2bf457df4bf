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

#include <numbers>

#include "pfl/euler_form.hpp"

namespace pfl {
namespace {

using F = Form<Rational>;

TEST(EulerForm, UnitTwoSphere) {
  const auto r = euler_form(unit_sphere_curvature<Rational>(2));
  EXPECT_EQ(r.form, F::blade(2, {1, 2}));
  EXPECT_EQ(r.top_coefficient, Rational(1));
}

TEST(EulerForm, UnitFourSphereMatchesMatchingsOracle) {
  const auto in = unit_sphere_curvature<Rational>(4);
  const auto r = euler_form(in);
  EXPECT_EQ(r.top_coefficient, Rational(3));
  EXPECT_EQ(r.form, pfaffian_matchings(in.omega).with_dimension(4));
  const auto& w = in.omega;
  EXPECT_EQ(r.form, w(0, 1) * w(2, 3) + w(0, 3) * w(1, 2) - w(0, 2) * w(1, 3));
}

TEST(EulerForm, RescaledFrameOnTwoSphere) {
  const auto e = unit_sphere_curvature<Rational>(2);
  const CurvatureInput<Rational> s = change_frame(e, scalar_multiply(Rational(2), identity<Rational>(2)));
  EXPECT_EQ(*s.gram, scalar_multiply(Rational(4), identity<Rational>(2)));
  EXPECT_EQ(s.omega(0, 1), F::blade(2, {1, 2}, Rational(4)));
  EXPECT_EQ(euler_form(s).form, euler_form(e).form);
}

TEST(EulerForm, OrientationReversingFrameFlipsSign) {
  // det(G)^{-1/2} uses the positive root, so pf picks up sign(det B).
  const auto e = unit_sphere_curvature<Rational>(2);
  const Matrix<Rational> b{{0, 1}, {1, 0}};
  EXPECT_EQ(euler_form(change_frame(e, b)).form, -euler_form(e).form);
}

TEST(EulerForm, NonSquareGramDeterminantIsError) {
  auto in = unit_sphere_curvature<Rational>(2);
  in.frame = FrameKind::general;
  in.gram = Matrix<Rational>{{2, 0}, {0, 1}};
  EXPECT_THROW(euler_form(in), ValidationError);
}

TEST(EulerForm, FloatScalarsAcceptPositiveDeterminant) {
  CurvatureInput<double> in{SkewMatrix<Form<double>>::validate(Matrix<Form<double>>{
                                {Form<double>(), Form<double>::blade(2, {1, 2}, 2.0)},
                                {Form<double>::blade(2, {1, 2}, -2.0), Form<double>()}}),
                            Matrix<double>{{2.0, 0.0}, {0.0, 2.0}}, FrameKind::general, std::nullopt};
  EXPECT_DOUBLE_EQ(euler_form(in).top_coefficient, 1.0);
}

TEST(EulerForm, InputValidation) {
  Matrix<F> odd(3);
  EXPECT_THROW(euler_form(CurvatureInput<Rational>{SkewMatrix<F>::validate(odd), std::nullopt, FrameKind::orthonormal, std::nullopt}), ValidationError);

  Matrix<F> wrong_degree(4);
  wrong_degree(0, 1) = F::blade(4, {1, 2, 3, 4});
  wrong_degree(1, 0) = -wrong_degree(0, 1);
  EXPECT_THROW(euler_form(CurvatureInput<Rational>{SkewMatrix<F>::validate(wrong_degree), std::nullopt, FrameKind::orthonormal, std::nullopt}), ValidationError);

  auto missing_gram = unit_sphere_curvature<Rational>(2);
  missing_gram.frame = FrameKind::general;
  EXPECT_THROW(euler_form(missing_gram), ValidationError);

  auto asym = unit_sphere_curvature<Rational>(2);
  asym.frame = FrameKind::general;
  asym.gram = Matrix<Rational>{{1, 2}, {3, 1}};
  EXPECT_THROW(euler_form(asym), ValidationError);

  auto neg = unit_sphere_curvature<Rational>(2);
  neg.frame = FrameKind::general;
  neg.gram = Matrix<Rational>{{-1, 0}, {0, -1}};
  EXPECT_THROW(euler_form(neg), ValidationError);
}

TEST(GaussBonnet, TwoSphere) {
  const auto r = gauss_bonnet_check(2);
  EXPECT_EQ(r.top_coefficient, Rational(1));
  EXPECT_NEAR(r.expected, 4.0 * std::numbers::pi, 1e-15);
  EXPECT_TRUE(r.within(1e-12)) << r.relative_difference;
}

TEST(GaussBonnet, FourSphere) {
  const auto r = gauss_bonnet_check(4);
  EXPECT_EQ(r.top_coefficient, Rational(3));
  EXPECT_NEAR(r.expected, 8.0 * std::numbers::pi * std::numbers::pi, 1e-12);
  EXPECT_TRUE(r.within(1e-12)) << r.relative_difference;
}

TEST(GaussBonnet, FlatTorusPatchIntegratesToZero) {
  CurvatureInput<Rational> flat{SkewMatrix<F>::validate(Matrix<F>(2)), std::nullopt, FrameKind::orthonormal, 1.0};
  const auto r = euler_form(flat);
  ASSERT_TRUE(r.gauss_bonnet_integral.has_value());
  EXPECT_EQ(*r.gauss_bonnet_integral, 0.0);
}

TEST(GaussBonnet, OnlyTabulatedSpheres) { EXPECT_THROW(gauss_bonnet_check(6), std::invalid_argument); }

}  // namespace
}  // namespace pfl
