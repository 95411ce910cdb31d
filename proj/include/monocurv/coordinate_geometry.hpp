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

#ifndef MONOCURV_COORDINATE_GEOMETRY_HPP
#define MONOCURV_COORDINATE_GEOMETRY_HPP

#include <Eigen/Dense>
#include <array>
#include <functional>

namespace monocurv::geometry {

/*
 * Generic curvature assembly for a metric on a 3-dimensional chart, with
 * every partial derivative taken by Richardson-extrapolated central
 * differences. Slow and only as accurate as the differencing; it exists to
 * cross-check closed forms.
 *
 * Conventions:
 *   Gamma^m_ij = 1/2 g^mk (d_i g_jk + d_j g_ik - d_k g_ij)
 *   R_ijkl = g_ln (d_i Gamma^n_jk - d_j Gamma^n_ik
 *                  + Gamma^m_jk Gamma^n_im - Gamma^m_ik Gamma^n_jm)
 *   Ric_ij = g^kl R_lijk,   scal = g^ij Ric_ij
 */

using Point = std::array<double, 3>;
using MetricField = std::function<Eigen::Matrix3d(const Point&)>;

/// gamma[m](i, j) = Gamma^m_ij.
using Christoffel = std::array<Eigen::Matrix3d, 3>;
using ChristoffelField = std::function<Christoffel(const Point&)>;

/// riemann[i][j](k, l) = R_ijkl.
using Riemann = std::array<std::array<Eigen::Matrix3d, 3>, 3>;

/// Christoffel symbols from differenced metric components.
Christoffel christoffel_from_metric(const MetricField& g, const Point& x, double step = 1e-3);

/// Fully covariant Riemann tensor from differenced Christoffel symbols.
Riemann riemann_from_christoffel(const MetricField& g, const ChristoffelField& gamma, const Point& x,
                                 double step = 1e-3);

Eigen::Matrix3d ricci_from_riemann(const Riemann& R, const Eigen::Matrix3d& g_inverse);

double scalar_from_ricci(const Eigen::Matrix3d& ricci, const Eigen::Matrix3d& g_inverse);

}  // namespace monocurv::geometry

#endif  // MONOCURV_COORDINATE_GEOMETRY_HPP
