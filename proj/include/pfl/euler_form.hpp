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

// Euler form of a Riemannian curvature matrix: the Pfaffian of the skew
// matrix of curvature 2-forms, taken in the even exterior algebra.
//
// In an orthonormal frame e the Euler form is pf(Omega_e). In a general
// frame s with Gram matrix G_s it is det(G_s)^{-1/2} pf(Omega_s).

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "pfl/errors.hpp"
#include "pfl/exterior.hpp"
#include "pfl/faddeev_leverrier.hpp"
#include "pfl/matrix.hpp"
#include "pfl/pfaffian.hpp"
#include "pfl/scalar.hpp"

namespace pfl {

enum class FrameKind { orthonormal, general };

template <typename S>
struct CurvatureInput {
  SkewMatrix<Form<S>> omega;
  std::optional<Matrix<S>> gram;  ///< required for FrameKind::general
  FrameKind frame = FrameKind::orthonormal;
  std::optional<double> volume;   ///< manifold volume, when known

  std::size_t dimension() const { return omega.size(); }
};

template <typename S>
struct EulerFormResult {
  Form<S> form;        ///< homogeneous of degree n (or zero)
  S top_coefficient;   ///< form = top_coefficient * e_1 ^ ... ^ e_n
  std::optional<double> gauss_bonnet_integral;
};

/// Throws ValidationError on odd n, entries that are not 2-forms (or zero)
/// in dimension n, or a Gram matrix that is missing, non-symmetric or has a
/// non-positive diagonal.
template <typename S>
void validate_curvature(const CurvatureInput<S>& input) {
  const std::size_t n = input.dimension();
  if (n % 2 != 0) throw ValidationError("curvature input: dimension " + std::to_string(n) + " is odd");
  if (n > kMaxFormDimension) throw ValidationError("curvature input: dimension too large");
  for (const Form<S>& f : input.omega.matrix().entries()) {
    if (f.is_zero()) continue;
    const int deg = f.homogeneous_degree();
    if (deg != 2 && deg != 0)
      throw ValidationError("curvature entry '" + f.to_string() + "' is not a 2-form");
    if (f.dimension() != 0 && f.dimension() != n)
      throw ValidationError("curvature entry '" + f.to_string() + "' lives in dimension " +
                            std::to_string(f.dimension()) + ", expected " + std::to_string(n));
  }
  if (input.frame == FrameKind::general) {
    if (!input.gram) throw ValidationError("general frame requires a Gram matrix");
    const Matrix<S>& g = *input.gram;
    if (g.size() != n) throw ValidationError("Gram matrix size does not match curvature matrix");
    admit_entries(g);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(to_double(g(i, i)) > 0.0)) throw ValidationError("Gram matrix diagonal must be positive");
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(g(i, j) == g(j, i))) throw ValidationError("Gram matrix is not symmetric");
    }
  }
}

template <typename S>
EulerFormResult<S> euler_form(const CurvatureInput<S>& input, unsigned threads = 1) {
  validate_curvature(input);
  const auto n = static_cast<unsigned>(input.dimension());
  Form<S> pf = pfaffian_fl(input.omega, {.threads = threads}).value.with_dimension(n);

  if (input.frame == FrameKind::general) {
    const S det = determinant(*input.gram, {.threads = threads});
    const std::optional<S> root = field_sqrt(det);
    if (!root)
      throw ValidationError("det(G) = " + to_text(det) +
                            " has no square root in the coefficient field");
    if (RingTraits<S>::is_zero(*root)) throw ValidationError("Gram matrix is singular");
    pf = pf.scaled(field_inverse(*root));
  }

  if (!pf.is_zero() && pf.homogeneous_degree() != static_cast<int>(n))
    throw ConsistencyError("Euler form is not homogeneous of top degree");

  EulerFormResult<S> result{pf, pf.top_coefficient(), std::nullopt};
  if (input.volume) result.gauss_bonnet_integral = to_double(result.top_coefficient) * *input.volume;
  return result;
}

/// Re-expresses the curvature data in the frame s_i = sum_k b_ki e_k:
/// Omega -> B^T Omega B, G -> B^T G B (G = I for an orthonormal input).
template <typename S>
CurvatureInput<S> change_frame(const CurvatureInput<S>& input, const Matrix<S>& b) {
  const std::size_t n = input.dimension();
  if (b.size() != n) throw std::invalid_argument("change_frame: B has the wrong size");
  const auto n32 = static_cast<unsigned>(n);
  const Matrix<Form<S>> bf =
      map_entries<Form<S>>(b, [&](const S& x) { return Form<S>::scalar(x, n32); });
  const Matrix<S> g = input.gram ? *input.gram : Matrix<S>::identity(n);
  return CurvatureInput<S>{
      SkewMatrix<Form<S>>::validate(transpose(bf) * input.omega.matrix() * bf),
      transpose(b) * g * b,
      FrameKind::general,
      input.volume,
  };
}

/// Unit round sphere S^n in an orthonormal frame: Omega_ij = e_i ^ e_j.
template <typename S>
CurvatureInput<S> unit_sphere_curvature(unsigned n) {
  if (n % 2 != 0 || n == 0) throw std::invalid_argument("unit_sphere_curvature: n must be even and positive");
  Matrix<Form<S>> omega(n);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      omega(i - 1, j - 1) = Form<S>::blade(n, {i, j});
      omega(j - 1, i - 1) = -omega(i - 1, j - 1);
    }
  return CurvatureInput<S>{SkewMatrix<Form<S>>::validate(std::move(omega)), std::nullopt,
                           FrameKind::orthonormal, std::nullopt};
}

/// Volume of the unit sphere, tabulated for the built-in examples.
inline double unit_sphere_volume(unsigned n) {
  switch (n) {
    case 2: return 4.0 * std::numbers::pi;
    case 4: return 8.0 * std::numbers::pi * std::numbers::pi / 3.0;
    default: throw std::invalid_argument("unit_sphere_volume: only S^2 and S^4 are tabulated");
  }
}

struct GaussBonnetReport {
  unsigned dimension = 0;
  Rational top_coefficient;
  double volume = 0.0;
  double integral = 0.0;  ///< top_coefficient * volume
  double expected = 0.0;  ///< (2 pi)^m * euler_characteristic
  double relative_difference = 0.0;

  bool within(double relative_tolerance) const { return relative_difference <= relative_tolerance; }
};

/// Compares the integrated Euler form of the unit sphere S^n, n in {2, 4},
/// against (2 pi)^{n/2} * 2.
inline GaussBonnetReport gauss_bonnet_check(unsigned n) {
  CurvatureInput<Rational> input = unit_sphere_curvature<Rational>(n);
  input.volume = unit_sphere_volume(n);
  const EulerFormResult<Rational> euler = euler_form(input);
  GaussBonnetReport report;
  report.dimension = n;
  report.top_coefficient = euler.top_coefficient;
  report.volume = *input.volume;
  report.integral = *euler.gauss_bonnet_integral;
  report.expected = std::pow(2.0 * std::numbers::pi, n / 2) * 2.0;
  report.relative_difference = std::abs(report.integral - report.expected) / std::abs(report.expected);
  return report;
}

}  // namespace pfl
