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

#include "monocurv/coordinate_geometry.hpp"

#include "monocurv/finite_difference.hpp"

namespace monocurv::geometry {

namespace {

constexpr int kLevels = 3;

// d/dx_dir of every entry of a matrix-valued field.
template <class Field>
auto partial(const Field& field, const Point& x, int dir, double step) {
  using Value = decltype(field(x));
  Value out{};
  std::array<double, kLevels> steps{};
  std::array<Value, kLevels> values{};
  for (int l = 0; l < kLevels; ++l) {
    const double h = step / static_cast<double>(1 << l);
    Point plus = x;
    Point minus = x;
    plus[dir] += 0.5 * h;
    minus[dir] -= 0.5 * h;
    steps[l] = h;
    const Value fp = field(plus);
    const Value fm = field(minus);
    if constexpr (std::is_same_v<Value, Eigen::Matrix3d>) {
      values[l] = (fp - fm) / h;
    } else {
      for (std::size_t m = 0; m < fp.size(); ++m) values[l][m] = (fp[m] - fm[m]) / h;
    }
  }
  auto extrapolate = [&](auto entry) {
    std::array<double, kLevels> v{};
    for (int l = 0; l < kLevels; ++l) v[l] = entry(values[l]);
    return fd::extrapolate_to_zero(steps, v);
  };
  if constexpr (std::is_same_v<Value, Eigen::Matrix3d>) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out(i, j) = extrapolate([&](const Value& v) { return v(i, j); });
    }
  } else {
    for (std::size_t m = 0; m < out.size(); ++m) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) out[m](i, j) = extrapolate([&](const Value& v) { return v[m](i, j); });
      }
    }
  }
  return out;
}

}  // namespace

Christoffel christoffel_from_metric(const MetricField& g, const Point& x, double step) {
  std::array<Eigen::Matrix3d, 3> dg;  // dg[k](i,j) = d_k g_ij
  for (int k = 0; k < 3; ++k) dg[k] = partial(g, x, k, step);
  const Eigen::Matrix3d g_inv = g(x).inverse();
  Christoffel gamma;
  for (int m = 0; m < 3; ++m) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 3; ++k) acc += g_inv(m, k) * (dg[i](j, k) + dg[j](i, k) - dg[k](i, j));
        gamma[m](i, j) = 0.5 * acc;
      }
    }
  }
  return gamma;
}

Riemann riemann_from_christoffel(const MetricField& g, const ChristoffelField& gamma, const Point& x,
                                 double step) {
  std::array<Christoffel, 3> dgamma;  // dgamma[i][n](j,k) = d_i Gamma^n_jk
  for (int i = 0; i < 3; ++i) dgamma[i] = partial(gamma, x, i, step);
  const Christoffel G = gamma(x);
  const Eigen::Matrix3d metric = g(x);
  Riemann R;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          double acc = 0.0;
          for (int n = 0; n < 3; ++n) {
            double up = dgamma[i][n](j, k) - dgamma[j][n](i, k);
            for (int m = 0; m < 3; ++m) up += G[m](j, k) * G[n](i, m) - G[m](i, k) * G[n](j, m);
            acc += metric(l, n) * up;
          }
          R[i][j](k, l) = acc;
        }
      }
    }
  }
  return R;
}

Eigen::Matrix3d ricci_from_riemann(const Riemann& R, const Eigen::Matrix3d& g_inverse) {
  Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) ric(i, j) += g_inverse(k, l) * R[l][i](j, k);
      }
    }
  }
  return ric;
}

double scalar_from_ricci(const Eigen::Matrix3d& ricci, const Eigen::Matrix3d& g_inverse) {
  return (g_inverse * ricci).trace();
}

}  // namespace monocurv::geometry
