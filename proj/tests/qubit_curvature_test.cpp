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

#include "monocurv/qubit_curvature.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "monocurv/coordinate_geometry.hpp"
#include "monocurv/extremum_analysis.hpp"

using namespace monocurv;
using doctest::Approx;

namespace {

const std::array<double, 14> kGrid = {-0.95, -0.9, -0.7, -0.5, -0.3, -0.1, -0.01,
                                      0.01,  0.1,  0.3,  0.5,  0.7,  0.9,  0.95};

}  // namespace

TEST_CASE("Morozova-Chentsov function") {
  CHECK(mc_function(catalog("kubo_mori"), 0.3, 0.3) == Approx(1.0 / 0.3));
  CHECK(mc_function(catalog("sld"), 2.0, 1.0) == Approx(2.0 / 3.0));
  CHECK_THROWS(mc_function(catalog("sld"), -1.0, 1.0));
}

TEST_CASE("closed form at the origin and reference values") {
  CHECK(curvature_closed_form(catalog("sld"), 0.0) == Approx(6.0).epsilon(1e-12));
  CHECK(curvature_closed_form(catalog("smallest"), 0.0) == Approx(-12.0).epsilon(1e-12));
  CHECK(std::abs(curvature_closed_form(catalog("kubo_mori"), 0.0)) < 1e-12);
  CHECK(curvature_closed_form(catalog("smallest"), 0.5) == Approx(-46.0 / 3.0).epsilon(1e-10));
  // high-precision values of the geometric route computed independently
  const MonotoneFunction km = catalog("kubo_mori");
  CHECK(curvature_closed_form(km, 0.1) == Approx(-0.0112113058).epsilon(1e-8));
  CHECK(curvature_closed_form(km, 0.5) == Approx(-0.3588336450).epsilon(1e-9));
  CHECK(curvature_closed_form(km, 0.9) == Approx(-3.8582546693).epsilon(1e-9));
  CHECK_THROWS(curvature_closed_form(km, 1.0));
}

TEST_CASE("property: curvature is even in a") {
  for (const MonotoneFunction& f : reference_catalog()) {
    for (double a : {0.05, 0.4, 0.8}) {
      CHECK(curvature_closed_form(f, a) == Approx(curvature_closed_form(f, -a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: removable singularity decays quadratically") {
  for (const MonotoneFunction& f : reference_catalog()) {
    const double c0 = 6.0 + 36.0 * f.jet(1.0, 2)[2];
    const double e2 = std::abs(curvature_closed_form_direct(f, 1e-2) - c0);
    const double e3 = std::abs(curvature_closed_form_direct(f, 1e-3) - c0);
    CHECK(e2 < 0.1 * std::max(1.0, std::abs(series_coefficients(f).c2)));
    // one decade in a buys about two decades, until roundoff in the summands takes over
    if (e2 > 1e-6) CHECK(e3 < 0.05 * e2);
  }
}

TEST_CASE("Laurent table: poles cancel and the last summand is constant") {
  for (const MonotoneFunction& f : reference_catalog()) {
    const auto table = closed_form_laurent(f);
    double m2 = 0.0;
    double m1 = 0.0;
    for (const auto& s : table) {
      m2 += s[0];
      m1 += s[1];
    }
    CHECK(std::abs(m2) < 1e-9);
    CHECK(std::abs(m1) < 1e-9);
    CHECK(table[4][2] == Approx(-3.5));
    double c0 = 0.0;
    for (const auto& s : table) c0 += s[2];
    CHECK(c0 == Approx(series_coefficients(f).c0).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("property: three routes agree on the grid") {
  for (const MonotoneFunction& f : reference_catalog()) {
    for (double a : kGrid) {
      const CurvatureSample s = curvature_sample(f, a);
      CHECK(s.max_rel_disagreement < 1e-6);
      const double x = 0.5 * (1.0 + a);
      const double y = 0.5 * (1.0 - a);
      const double closed = s.r_closed;
      CHECK(curvature_sum_formula(f, x, y) == Approx(closed).epsilon(1e-8).scale(1.0));
      CHECK(sum_functions_f_form(f, x, y).curvature() == Approx(closed).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("sum functions: limit forms equal the f forms") {
  for (const MonotoneFunction& f : reference_catalog()) {
    const SumFunctions a = sum_functions_from_limits(f, 0.8, 0.2);
    const SumFunctions b = sum_functions_f_form(f, 0.8, 0.2);
    CHECK(a.sh1 == Approx(b.sh1).epsilon(1e-10));
    CHECK(a.sh2 == Approx(b.sh2).epsilon(1e-10));
    CHECK(a.sh3 == Approx(b.sh3).epsilon(1e-10));
    CHECK(a.sh4 == Approx(b.sh4).epsilon(1e-10));
  }
}

TEST_CASE("degenerate spectrum in the sum route") {
  CHECK(curvature_via_sums(catalog("sld"), 0.5, 0.5) == Approx(6.0).epsilon(1e-8));
  CHECK(curvature_via_sums(catalog("sld"), 0.5 + 1e-8, 0.5 - 1e-8) == Approx(6.0).epsilon(1e-8));
  CHECK(curvature_via_sums(catalog("smallest"), 0.75, 0.25) ==
        Approx(curvature_closed_form(catalog("smallest"), 0.5)).epsilon(1e-8));
  CHECK_THROWS(curvature_via_sums(catalog("sld"), 0.6, 0.6));
}

TEST_CASE("metric components") {
  for (const MonotoneFunction& f : reference_catalog()) CHECK(metric_tensor(f, 0.0).g_rr == Approx(1.0));
  CHECK(metric_tensor(catalog("sld"), 0.5).g_thth == Approx(0.25));
  CHECK(metric_tensor(catalog("smallest"), 0.5).g_thth == Approx(1.0 / 3.0));
}

TEST_CASE("Christoffel symbols") {
  for (const MonotoneFunction& f : reference_catalog()) CHECK(christoffel(f, 0.5, 1.0).g1_11 == Approx(2.0 / 3.0));
  CHECK(std::abs(christoffel(catalog("sld"), 0.5, std::numbers::pi / 2).g2_33) < 1e-15);
  CHECK(christoffel(catalog("sld"), 0.5, std::numbers::pi / 4).g3_23 == Approx(1.0));
}

TEST_CASE("Riemann components") {
  const MonotoneFunction f = catalog("kubo_mori");
  const QubitRiemann r = riemann_components(f, 0.4, std::numbers::pi / 3);
  CHECK(r.r1313 / r.r1212 == Approx(0.75));
  CHECK(std::abs(riemann_components(f, 0.4, 1e-9).r2323) < 1e-12);
  const auto R = r.full();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          CHECK(R[i][j](k, l) == Approx(-R[j][i](k, l)));
          CHECK(R[i][j](k, l) == Approx(-R[i][j](l, k)));
          CHECK(R[i][j](k, l) == Approx(R[k][l](i, j)));
        }
      }
    }
  }
}

TEST_CASE("property: closed-form tensors match generic differencing") {
  for (const MonotoneFunction& f : {catalog("kubo_mori"), catalog("wyd", 0.3), catalog("smallest")}) {
    const geometry::Point x = {0.45, 1.1, 0.3};
    const geometry::MetricField g = [&f](const geometry::Point& p) { return metric_matrix(f, p); };
    const geometry::Christoffel numeric = geometry::christoffel_from_metric(g, x);
    const geometry::Christoffel exact = christoffel(f, x[0], x[1]).full();
    for (int m = 0; m < 3; ++m) {
      CHECK((numeric[m] - exact[m]).norm() < 1e-8 * std::max(1.0, exact[m].norm()));
    }
    const geometry::ChristoffelField gamma = [&f](const geometry::Point& p) { return christoffel(f, p[0], p[1]).full(); };
    const geometry::Riemann riemann = geometry::riemann_from_christoffel(g, gamma, x);
    const geometry::Riemann closed = riemann_components(f, x[0], x[1]).full();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK((riemann[i][j] - closed[i][j]).norm() < 1e-7);
    }
    const Eigen::Matrix3d ginv = g(x).inverse();
    const Eigen::Matrix3d ric = geometry::ricci_from_riemann(riemann, ginv);
    const QubitRicci rc = ricci_components(f, x[0], x[1]);
    CHECK(ric(0, 0) == Approx(rc.ric11).epsilon(1e-7));
    CHECK(ric(1, 1) == Approx(rc.ric22).epsilon(1e-7));
    CHECK(ric(2, 2) == Approx(rc.ric33).epsilon(1e-7));
    CHECK(geometry::scalar_from_ricci(ric, ginv) == Approx(curvature_closed_form(f, x[0])).epsilon(1e-7));
  }
}

TEST_CASE("generic geometry: unit three-sphere has scalar curvature 6") {
  const geometry::MetricField g = [](const geometry::Point& p) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    const double s = std::sin(p[0]);
    m(0, 0) = 1.0;
    m(1, 1) = s * s;
    m(2, 2) = s * s * std::sin(p[1]) * std::sin(p[1]);
    return m;
  };
  const geometry::ChristoffelField gamma = [&g](const geometry::Point& p) {
    return geometry::christoffel_from_metric(g, p);
  };
  const geometry::Point x = {0.9, 1.2, 0.0};
  const Eigen::Matrix3d ginv = g(x).inverse();
  const auto R = geometry::riemann_from_christoffel(g, gamma, x);
  CHECK(geometry::scalar_from_ricci(geometry::ricci_from_riemann(R, ginv), ginv) == Approx(6.0).epsilon(1e-6));
}

TEST_CASE("property: geometric curvature does not depend on theta") {
  for (const MonotoneFunction& f : reference_catalog()) {
    const double ref = curvature_geometric(f, 0.6);
    for (double theta : {0.3, 1.0, 2.5}) CHECK(curvature_geometric(f, 0.6, theta) == Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("metric evaluation") {
  const std::array<double, 2> uniform = {0.5, 0.5};
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(2, 2);
  X(0, 0) = 1.0;
  X(1, 1) = -1.0;
  CHECK(metric_eval(uniform, X, X, catalog("sld")) == Approx(4.0));
  CHECK(stokes_normalization() == Approx(1.0).epsilon(1e-14));
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS(metric_eval(uniform, bad, bad, catalog("sld")));
  CHECK_THROWS(metric_eval(uniform, Eigen::MatrixXcd::Zero(3, 3), X, catalog("sld")));
}

TEST_CASE("property: metric evaluation is positive and matches the Bloch line element") {
  const std::complex<double> i(0.0, 1.0);
  for (const MonotoneFunction& f : reference_catalog()) {
    for (double r : {0.2, 0.5, 0.8}) {
      const std::array<double, 2> s = {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
      // tangent of rotating the Bloch vector at theta = pi/2 in the eigenbasis: (r/2) sigma_x direction
      Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(2, 2);
      T(0, 1) = 0.5 * r;
      T(1, 0) = 0.5 * r;
      CHECK(metric_eval(s, T, T, f) == Approx(metric_tensor(f, r).g_thth).epsilon(1e-12));
      Eigen::MatrixXcd Y = Eigen::MatrixXcd::Zero(2, 2);
      Y(0, 0) = 0.3;
      Y(1, 1) = -0.3;
      Y(0, 1) = 0.2 + 0.1 * i;
      Y(1, 0) = 0.2 - 0.1 * i;
      CHECK(metric_eval(s, Y, Y, f) > 0.0);
    }
  }
}
