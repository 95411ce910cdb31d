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

#ifndef MONOCURV_FINITE_DIFFERENCE_HPP
#define MONOCURV_FINITE_DIFFERENCE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace monocurv::fd {

/*
 * Central finite differences with Richardson extrapolation.
 *
 * The k-th order central stencil
 *
 *     D_h^k f(x) = h^-k  sum_j (-1)^j C(k,j) f(x + (k/2 - j) h)
 *
 * has an error expansion in even powers of h, so successive halvings of the
 * step can be combined in a Neville table in h^2. All of this is
 * ill-conditioned: roundoff grows like eps * 2^k / h^k, so the caller picks
 * h per derivative order.
 */

template <class F>
double central_difference(const F& f, double x, int order, double h) {
  if (order < 0) throw std::invalid_argument("central_difference: negative order");
  double acc = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= order; ++j) {
    const double offset = (0.5 * order - j) * h;
    acc += ((j % 2 == 0) ? binom : -binom) * f(x + offset);
    binom = binom * (order - j) / (j + 1);
  }
  return acc / std::pow(h, order);
}

/// Extrapolates samples v_i = g(h_i) of an even function of h to h = 0 by
/// polynomial interpolation in h^2 (Neville).
inline double extrapolate_to_zero(std::span<const double> steps, std::span<const double> values) {
  if (steps.size() != values.size() || steps.empty()) {
    throw std::invalid_argument("extrapolate_to_zero: size mismatch");
  }
  std::vector<double> p(values.begin(), values.end());
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const double si = steps[i] * steps[i];
      const double sj = steps[i - level] * steps[i - level];
      p[i] = (si * p[i - 1] - sj * p[i]) / (si - sj);
      if (i == level) break;
    }
  }
  return p[n - 1];
}

template <class F>
double richardson_derivative(const F& f, double x, int order, double h, int levels = 3) {
  std::vector<double> steps;
  std::vector<double> values;
  for (int l = 0; l < levels; ++l) {
    const double step = h / std::pow(2.0, l);
    steps.push_back(step);
    values.push_back(central_difference(f, x, order, step));
  }
  return extrapolate_to_zero(steps, values);
}

/// Coefficients (c0, c2, c4, ...) of the even polynomial in a that
/// interpolates samples (a_i, v_i); one coefficient per sample.
inline std::vector<double> fit_even_polynomial(std::span<const double> abscissae, std::span<const double> values) {
  const std::size_t n = abscissae.size();
  if (values.size() != n || n == 0) throw std::invalid_argument("fit_even_polynomial: size mismatch");
  // Vandermonde system in s = a^2, solved by Gaussian elimination with partial pivoting.
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const double s = abscissae[i] * abscissae[i];
    double power = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = power;
      power *= s;
    }
    m[i][n] = values[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) throw std::domain_error("fit_even_polynomial: repeated abscissae");
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<double> coeff(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * coeff[j];
    coeff[i] = acc / m[i][i];
  }
  return coeff;
}

}  // namespace monocurv::fd

#endif  // MONOCURV_FINITE_DIFFERENCE_HPP
