// Copyright 2026 The monocurv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOCURV_QUBIT_CURVATURE_HPP
#define MONOCURV_QUBIT_CURVATURE_HPP

#include <Eigen/Dense>
#include <array>
#include <span>

#include "monocurv/coordinate_geometry.hpp"
#include "monocurv/monotone_function.hpp"

namespace monocurv {

/// Qubit state with eigenvalues (1+a)/2 and (1-a)/2, |a| < 1.
struct QubitState {
  double a;

  double lambda1() const { return 0.5 * (1.0 + a); }
  double lambda2() const { return 0.5 * (1.0 - a); }
};

/// c(x,y) = 1 / (y f(x/y)).
double mc_function(const MonotoneFunction& f, double x, double y);

/// Scalar curvature of the qubit state space at the state with parameter a.
/// Near the origin (|a| < 1e-3) the explicit formula cancels catastrophically
/// and the even series through a^4 is used instead.
double curvature_closed_form(const MonotoneFunction& f, double a);

/// The same formula without the small-|a| switch; |a| must be positive.
double curvature_closed_form_direct(const MonotoneFunction& f, double a);

/// The five summands of the closed form, in the order they are usually
/// written (two derivative-squared terms, f'' term, f term, rational term).
std::array<double, 5> closed_form_summands(const MonotoneFunction& f, double a);

/// Laurent coefficients of the five summands at a = 0; entry [s][k] is the
/// coefficient of a^(k-2) in summand s, k = 0..4.
std::array<std::array<double, 5>, 5> closed_form_laurent(const MonotoneFunction& f);

/// The four sum-functions sh_1..sh_4 of the two-eigenvalue spectrum.
struct SumFunctions {
  double sh1;
  double sh2;
  double sh3;
  double sh4;

  /// sh1 - sh2/2 + 2 sh3 - sh4 + 3/2.
  double curvature() const { return sh1 - 0.5 * sh2 + 2.0 * sh3 - sh4 + 1.5; }
};

/// sh_i assembled from the pair limits h_i(x,x,y), h_i(x,y,x), ...
SumFunctions sum_functions_from_limits(const MonotoneFunction& f, double x, double y);

/// sh_i written directly through f, f', f'' at x/y and y/x.
SumFunctions sum_functions_f_form(const MonotoneFunction& f, double x, double y);

/// Scalar curvature through the sum-functions. Nearly degenerate spectra
/// (|x-y| < 1e-6) are extrapolated from x,y = 1/2 +- delta.
double curvature_via_sums(const MonotoneFunction& f, double lambda1, double lambda2);

/// The single closed expression in x = lambda1, y = lambda2 obtained by
/// adding up the f-forms of the sum-functions.
double curvature_sum_formula(const MonotoneFunction& f, double x, double y);

/// Diagonal metric in Bloch coordinates (r, theta, phi):
/// g_rr = 1/(1-r^2), g_thth = r^2/((1+r) f((1-r)/(1+r))), g_phph = g_thth sin^2.
struct QubitMetric {
  double g_rr;
  double g_thth;  // theta-free factor, also of g_phph
};

QubitMetric metric_tensor(const MonotoneFunction& f, double r);

/// Full metric matrix at (r, theta, phi).
Eigen::Matrix3d metric_matrix(const MonotoneFunction& f, const geometry::Point& x);

/// Nonzero independent Christoffel symbols, named Gamma^upper_lower.
struct QubitChristoffel {
  double g1_11;
  double g1_22;
  double g1_33;
  double g2_12;
  double g2_33;
  double g3_13;
  double g3_23;

  geometry::Christoffel full() const;
};

QubitChristoffel christoffel(const MonotoneFunction& f, double r, double theta);

struct QubitRiemann {
  double r1212;
  double r1313;
  double r2323;

  geometry::Riemann full() const;
};

QubitRiemann riemann_components(const MonotoneFunction& f, double r, double theta);

struct QubitRicci {
  double ric11;
  double ric22;
  double ric33;
};

QubitRicci ricci_components(const MonotoneFunction& f, double r, double theta);

/// Contraction of the Ricci components with the inverse metric.
double curvature_geometric(const MonotoneFunction& f, double r, double theta = 1.5707963267948966);

struct CurvatureSample {
  double a;
  double r_closed;
  double r_sums;
  double r_geometric;
  double max_rel_disagreement;
};

/// All three routes at one point. At a = 0 the sum and geometric routes,
/// which are singular there, are extrapolated from |a| in {1e-2, 5e-3, 2.5e-3}.
CurvatureSample curvature_sample(const MonotoneFunction& f, double a);

/// K_D(X,Y) = sum_ij conj(X_ij) Y_ij c(lambda_i, lambda_j) with X and Y given
/// in the eigenbasis of D.
double metric_eval(std::span<const double> spectrum, const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                   const MonotoneFunction& f);

/// Ratio g_rr / K_D(dD/dr, dD/dr) for f = (1+x)/2 at r = 1/2; the constant
/// that relates the spectral scalar product to the Bloch line element.
double stokes_normalization();

}  // namespace monocurv

#endif  // MONOCURV_QUBIT_CURVATURE_HPP
