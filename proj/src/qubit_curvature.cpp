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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "monocurv/extremum_analysis.hpp"
#include "monocurv/finite_difference.hpp"
#include "monocurv/nlevel_curvature.hpp"
#include "monocurv/taylor_series.hpp"

namespace monocurv {

namespace {

constexpr double kSeriesSwitch = 1e-3;
constexpr double kDegenerateGap = 1e-6;
constexpr double kDegenerateDelta = 1e-4;
constexpr std::array<double, 3> kSmallRadii = {1e-2, 5e-3, 2.5e-3};

void require_state(double a) {
  if (!(std::abs(a) < 1.0)) throw std::domain_error("qubit parameter must satisfy |a| < 1");
}

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radial coordinate must lie in (0, 1)");
}

void require_polar(double theta) {
  if (!(std::sin(theta) > 0.0)) throw std::domain_error("theta must lie strictly between the poles");
}

// f, f'/f and f''/f at c(r) = (1-r)/(1+r).
struct RadialData {
  double F;
  double q;
  double p;
};

RadialData radial_data(const MonotoneFunction& f, double r) {
  const TaylorJet j = f.jet((1.0 - r) / (1.0 + r), 2);
  return {j[0], j[1] / j[0], j[2] / j[0]};
}

// Value at s of the quadratic in s through (s_i, v_i).
double quadratic_through(const std::array<double, 3>& s, const std::array<double, 3>& v, double at) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (j != i) w *= (at - s[j]) / (s[i] - s[j]);
    }
    acc += w * v[i];
  }
  return acc;
}

// Interpolates an even function of a, known away from the origin, at small |a|.
template <class Route>
double even_interpolation(const Route& route, double a) {
  std::array<double, 3> s{};
  std::array<double, 3> v{};
  for (int i = 0; i < 3; ++i) {
    s[i] = kSmallRadii[i] * kSmallRadii[i];
    v[i] = route(kSmallRadii[i]);
  }
  return quadratic_through(s, v, a * a);
}

double relative_spread(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double spectral_form(std::span<const double> spectrum, const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                     const MonotoneFunction& f) {
  const auto n = static_cast<Eigen::Index>(spectrum.size());
  if (X.rows() != n || X.cols() != n || Y.rows() != n || Y.cols() != n) {
    throw std::invalid_argument("metric_eval: dimension mismatch");
  }
  const double scale = std::max({1.0, X.norm(), Y.norm()});
  if (std::abs(X.trace()) > 1e-12 * scale || std::abs(Y.trace()) > 1e-12 * scale) {
    throw std::invalid_argument("metric_eval: tangent vectors must be traceless");
  }
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      acc += std::conj(X(i, j)) * Y(i, j) * mc_function(f, spectrum[i], spectrum[j]);
    }
  }
  return acc.real();
}

}  // namespace

double mc_function(const MonotoneFunction& f, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw std::domain_error("mc_function: arguments must be positive");
  return 1.0 / (y * f(x / y));
}

std::array<double, 5> closed_form_summands(const MonotoneFunction& f, double a) {
  require_state(a);
  if (a == 0.0) throw std::domain_error("closed_form_summands: a = 0 is a pole of the summands");
  const TaylorJet j = f.jet((1.0 - a) / (1.0 + a), 2);
  const double F = j[0];
  const double F1 = j[1];
  const double F2 = j[2];
  const double ap = 1.0 + a;
  return {
      14.0 * (a - 1.0) * F1 * F1 / (ap * ap * ap * F * F),
      2.0 * (a * a + 7.0 * a - 6.0) * F1 / (ap * ap * a * F),
      8.0 * (1.0 - a) * F2 / (ap * ap * ap * F),
      2.0 * ap * F / (a * a),
      (3.0 * a * a * a + 5.0 * a * a + 8.0 * a - 4.0) / (2.0 * ap * a * a),
  };
}

double curvature_closed_form_direct(const MonotoneFunction& f, double a) {
  const auto s = closed_form_summands(f, a);
  return s[0] + s[1] + s[2] + s[3] + s[4];
}

double curvature_closed_form(const MonotoneFunction& f, double a) {
  require_state(a);
  if (std::abs(a) < kSeriesSwitch) return series_coefficients(f).evaluate(a);
  return curvature_closed_form_direct(f, a);
}

std::array<std::array<double, 5>, 5> closed_form_laurent(const MonotoneFunction& f) {
  constexpr std::size_t kOrder = 6;
  const TaylorJet j = f.jet(1.0, kMaxJetOrder);
  std::vector<double> unit(kMaxJetOrder + 1);
  double factorial = 1.0;
  for (int k = 0; k <= kMaxJetOrder; ++k) {
    if (k > 1) factorial *= k;
    unit[k] = j[k] / factorial;
  }
  const TaylorSeries P(unit);
  const TaylorSeries a = TaylorSeries::variable(0.0, kOrder);
  const TaylorSeries ap = a + 1.0;
  const TaylorSeries w = -2.0 * a / ap;  // (1-a)/(1+a) - 1
  const TaylorSeries F = P.compose(w);
  const TaylorSeries F1 = P.differentiated().compose(w);
  const TaylorSeries F2 = P.differentiated().differentiated().compose(w);
  const TaylorSeries ap3 = ap * ap * ap;
  // Each summand multiplied by a^2.
  const std::array<TaylorSeries, 5> scaled = {
      14.0 * a * a * (a - 1.0) * F1 * F1 / (ap3 * F * F),
      2.0 * a * (a * a + 7.0 * a - 6.0) * F1 / (ap * ap * F),
      8.0 * a * a * (1.0 - a) * F2 / (ap3 * F),
      2.0 * ap * F,
      (3.0 * a * a * a + 5.0 * a * a + 8.0 * a - 4.0) / (2.0 * ap),
  };
  std::array<std::array<double, 5>, 5> out{};
  for (int s = 0; s < 5; ++s) {
    for (int k = 0; k < 5; ++k) out[s][k] = scaled[s][k];
  }
  return out;
}

SumFunctions sum_functions_from_limits(const MonotoneFunction& f, double x, double y) {
  const HTerms xxy = h_terms_xxy(f, x, y);
  const HTerms xyx = h_terms_xyx(f, x, y);
  const HTerms yyx = h_terms_xxy(f, y, x);
  const HTerms yxy = h_terms_xyx(f, y, x);
  return {
      xxy.h1 + 2.0 * xyx.h1 + yyx.h1 + 2.0 * yxy.h1,
      xxy.h2 + 2.0 * xyx.h2 + yyx.h2 + 2.0 * yxy.h2,
      xxy.h3 + 2.0 * xyx.h3 + yyx.h3 + 2.0 * yxy.h3,
      xxy.h4 + 2.0 * xyx.h4 + yyx.h4 + 2.0 * yxy.h4,
  };
}

SumFunctions sum_functions_f_form(const MonotoneFunction& f, double x, double y) {
  if (!(x > 0.0 && y > 0.0) || x == y) throw std::domain_error("sum functions need distinct positive eigenvalues");
  const TaylorJet ja = f.jet(x / y, 2);
  const TaylorJet jb = f.jet(y / x, 2);
  const double A = ja[0];
  const double ga = ja[1] / ja[0];
  const double pa = ja[2] / ja[0];
  const double B = jb[0];
  const double gb = jb[1] / jb[0];
  const double pb = jb[2] / jb[0];
  const double d = x - y;
  const double d2 = d * d;
  const double x2 = x * x;
  const double y2 = y * y;
  const double cross = y * y2 / (x2 * x2) * (A * jb[1] / (B * B)) * (A * jb[1] / (B * B));
  SumFunctions s{};
  s.sh1 = (y * (x + y) / x * A * A + y - 3.0 * x + 4.0 * x * d / y * ga) / d2;
  s.sh2 = x / y2 * ga * ga + cross + 2.0 * y * (x + y) / (x * d2) * A * A - 8.0 * y / d2 * A + 2.0 * (x + y) / d2;
  s.sh3 = y * gb / x2 + y2 / (x2 * x) * (pb - gb * gb) + x * ga / y2 + x2 / (y2 * y) * (pa - ga * ga) -
          (1.0 - 2.0 * x * ga / y) / d + (1.0 - 2.0 * y * gb / x) / d;
  s.sh4 = x / y2 * ga * ga + cross + ga / y + y / x2 * A * jb[1] / (B * B);
  return s;
}

double curvature_via_sums(const MonotoneFunction& f, double lambda1, double lambda2) {
  if (!(lambda1 > 0.0 && lambda2 > 0.0)) throw std::domain_error("eigenvalues must be positive");
  if (std::abs(lambda1 + lambda2 - 1.0) > 1e-12) throw std::domain_error("eigenvalues must sum to 1");
  if (std::abs(lambda1 - lambda2) < kDegenerateGap) {
    auto at = [&](double delta) { return sum_functions_from_limits(f, 0.5 + delta, 0.5 - delta).curvature(); };
    const std::array<double, 2> steps = {kDegenerateDelta, 0.5 * kDegenerateDelta};
    const std::array<double, 2> values = {at(steps[0]), at(steps[1])};
    return fd::extrapolate_to_zero(steps, values);
  }
  return sum_functions_from_limits(f, lambda1, lambda2).curvature();
}

double curvature_sum_formula(const MonotoneFunction& f, double x, double y) {
  if (!(x > 0.0 && y > 0.0) || x == y) throw std::domain_error("sum formula needs distinct positive eigenvalues");
  const TaylorJet ja = f.jet(x / y, 2);
  const TaylorJet jb = f.jet(y / x, 1);
  const double A = ja[0];
  const double ga = ja[1] / A;
  const double gb = jb[1] / jb[0];
  const double d = x - y;
  return 2.0 * (2.0 * y * A - 1.0) / (d * d) + 6.0 * (2.0 * x * ja[1] - y * A) / (y * d * A) -
         0.5 * x * (8.0 + 3.0 * y) / (y * y * y) * ga * ga - 1.5 * y / (x * x) * gb * gb + (3.0 + x) * ga / (y * y) +
         2.0 * x * ja[2] / (y * y * y * A) - gb / x - 2.0 * ja[1] * jb[1] / (x * x * jb[0] * jb[0]) + 1.5;
}

QubitMetric metric_tensor(const MonotoneFunction& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("metric_tensor: r must lie in [0, 1)");
  return {1.0 / (1.0 - r * r), r * r / ((1.0 + r) * f((1.0 - r) / (1.0 + r)))};
}

Eigen::Matrix3d metric_matrix(const MonotoneFunction& f, const geometry::Point& x) {
  const QubitMetric m = metric_tensor(f, x[0]);
  const double s = std::sin(x[1]);
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  g(0, 0) = m.g_rr;
  g(1, 1) = m.g_thth;
  g(2, 2) = m.g_thth * s * s;
  return g;
}

geometry::Christoffel QubitChristoffel::full() const {
  geometry::Christoffel G{Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero()};
  G[0](0, 0) = g1_11;
  G[0](1, 1) = g1_22;
  G[0](2, 2) = g1_33;
  G[1](0, 1) = G[1](1, 0) = g2_12;
  G[1](2, 2) = g2_33;
  G[2](0, 2) = G[2](2, 0) = g3_13;
  G[2](1, 2) = G[2](2, 1) = g3_23;
  return G;
}

QubitChristoffel christoffel(const MonotoneFunction& f, double r, double theta) {
  require_radius(r);
  require_polar(theta);
  const RadialData d = radial_data(f, r);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double bracket = r * r + 3.0 * r + 2.0 + 2.0 * r * d.q;
  const double g1_22 = -r * (1.0 - r) / (2.0 * (1.0 + r) * (1.0 + r) * d.F) * bracket;
  const double g2_12 = bracket / (2.0 * r * (1.0 + r) * (1.0 + r));
  return {r / (1.0 - r * r), g1_22, s * s * g1_22, g2_12, -s * c, g2_12, c / s};
}

geometry::Riemann QubitRiemann::full() const {
  geometry::Riemann R;
  for (auto& row : R) row.fill(Eigen::Matrix3d::Zero());
  auto put = [&R](int i, int j, double v) {
    R[i][j](i, j) = v;
    R[j][i](i, j) = -v;
    R[i][j](j, i) = -v;
    R[j][i](j, i) = v;
  };
  put(0, 1, r1212);
  put(0, 2, r1313);
  put(1, 2, r2323);
  return R;
}

QubitRiemann riemann_components(const MonotoneFunction& f, double r, double theta) {
  require_radius(r);
  require_polar(theta);
  const RadialData d = radial_data(f, r);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double rp = 1.0 + r;
  const double rm = 1.0 - r;
  const double rp2 = rp * rp;
  const double rp4 = rp2 * rp2;
  const double r1212 = -r / (rp4 * (1.0 - r * r) * d.F) *
                       (2.0 * r * rm * d.p - 3.0 * r * rm * d.q * d.q + rp * (3.0 * r - 2.0) * d.q +
                        (r * r + r + 4.0) * rp2 / 4.0);
  const double r2323 = r * r * rm * s2 / (rp4 * d.F * d.F) *
                       (r * (r + 2.0) * d.q + r * r / rp * d.q * d.q - rp2 * rp / rm * d.F +
                        rp * (2.0 + r) * (2.0 + r) / 4.0);
  return {r1212, s2 * r1212, r2323};
}

QubitRicci ricci_components(const MonotoneFunction& f, double r, double theta) {
  require_radius(r);
  require_polar(theta);
  const RadialData d = radial_data(f, r);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double rp = 1.0 + r;
  const double rm = 1.0 - r;
  const double rp2 = rp * rp;
  const double rp4 = rp2 * rp2;
  const double ric11 = (4.0 * d.p - 6.0 * d.q * d.q + 2.0 * rp * (3.0 * r - 2.0) / (r * rm) * d.q +
                        (r * r + r + 4.0) * rp2 / (2.0 * r * rm)) /
                       rp4;
  const double ric22 = r * r * rm / (rp4 * d.F) *
                       (2.0 * d.p - 4.0 * d.q * d.q + rp * (r * r + 4.0 * r - 4.0) / (r * rm) * d.q +
                        rp4 / (r * r * rm) * d.F + (r * r * r + 2.0 * r * r + 2.0 * r - 2.0) * rp2 / (2.0 * r * r * rm));
  return {ric11, ric22, s2 * ric22};
}

double curvature_geometric(const MonotoneFunction& f, double r, double theta) {
  const QubitRicci ric = ricci_components(f, r, theta);
  const Eigen::Matrix3d g = metric_matrix(f, {r, theta, 0.0});
  return ric.ric11 / g(0, 0) + ric.ric22 / g(1, 1) + ric.ric33 / g(2, 2);
}

CurvatureSample curvature_sample(const MonotoneFunction& f, double a) {
  require_state(a);
  CurvatureSample out{a, curvature_closed_form(f, a), 0.0, 0.0, 0.0};
  const double r = std::abs(a);
  auto sums = [&f](double x) { return curvature_via_sums(f, 0.5 * (1.0 + x), 0.5 * (1.0 - x)); };
  auto geometric = [&f](double x) { return curvature_geometric(f, x); };
  if (r < kSeriesSwitch) {
    out.r_sums = even_interpolation(sums, a);
    out.r_geometric = even_interpolation(geometric, a);
  } else {
    out.r_sums = sums(a);
    out.r_geometric = geometric(r);
  }
  out.max_rel_disagreement = std::max({relative_spread(out.r_closed, out.r_sums),
                                       relative_spread(out.r_closed, out.r_geometric),
                                       relative_spread(out.r_sums, out.r_geometric)});
  return out;
}

double metric_eval(std::span<const double> spectrum, const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                   const MonotoneFunction& f) {
  return stokes_normalization() * spectral_form(spectrum, X, Y, f);
}

double stokes_normalization() {
  static const double constant = [] {
    const MonotoneFunction sld = catalog("sld");
    const double r = 0.5;
    const std::array<double, 2> spectrum = {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
    Eigen::MatrixXcd radial = Eigen::MatrixXcd::Zero(2, 2);
    radial(0, 0) = 0.5;
    radial(1, 1) = -0.5;
    return metric_tensor(sld, r).g_rr / spectral_form(spectrum, radial, radial, sld);
  }();
  return constant;
}

}  // namespace monocurv
