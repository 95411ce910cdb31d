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

#include "monocurv/nlevel_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monocurv/qubit_curvature.hpp"

namespace monocurv {

namespace {

constexpr double kTraceTolerance = 1e-12;
constexpr double kParseTraceTolerance = 1e-9;
constexpr double kCoincidence = 1e-6;

bool coincide(double a, double b) { return std::abs(a - b) <= kCoincidence * std::max(a, b); }

// f'/f at u.
double log_derivative(const MonotoneFunction& f, double u) {
  const TaylorJet j = f.jet(u, 1);
  return j[1] / j[0];
}

void require_positive(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw std::domain_error("h: arguments must be positive");
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
  if (values_.size() < 2) throw std::invalid_argument("spectrum needs at least two eigenvalues");
  for (double v : values_) {
    if (!(v > 0.0)) throw std::invalid_argument("spectrum entries must be positive");
  }
  const double trace = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(trace - 1.0) > kTraceTolerance) throw std::invalid_argument("spectrum must sum to 1");
}

Spectrum Spectrum::parse(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string token(text.substr(start, comma - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("spectrum: cannot parse '" + token + "'");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("spectrum: cannot parse '" + token + "'");
    }
    values.push_back(v);
    start = comma + 1;
  }
  const double trace = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(trace - 1.0) > kParseTraceTolerance) {
    throw std::invalid_argument("spectrum: eigenvalues must sum to 1");
  }
  for (double& v : values) v /= trace;
  return Spectrum(std::move(values));
}

HTerms h_terms_distinct(const MonotoneFunction& f, double x, double y, double z) {
  require_positive(x, y, z);
  const double cxy = mc_function(f, x, y);
  const double cxz = mc_function(f, x, z);
  const double cyz = mc_function(f, y, z);
  const double gx = log_derivative(f, z / x);
  const double gy = log_derivative(f, z / y);
  HTerms h{};
  h.h1 = (cxy - z * cxz * cyz) / ((x - z) * (y - z) * cxz * cyz);
  h.h2 = (cxz - cyz) * (cxz - cyz) / ((x - y) * (x - y) * cxy * cxz * cyz);
  h.h3 = z / (x - y) * (-gx / x + gy / y);
  h.h4 = z * gx * gy / (x * y);
  return h;
}

HTerms h_terms_xxy(const MonotoneFunction& f, double x, double y) {
  require_positive(x, y, 1.0);
  const double c = mc_function(f, x, y);
  const double gu = log_derivative(f, x / y);
  const TaylorJet j = f.jet(y / x, 2);
  const double gv = j[1] / j[0];
  const double dgv = j[2] / j[0] - gv * gv;
  HTerms h{};
  h.h1 = (1.0 - x * y * c * c) / (x * (x - y) * (x - y) * c * c);
  h.h2 = x * gu * gu / (y * y);
  h.h3 = y * gv / (x * x) + y * y * dgv / (x * x * x);
  h.h4 = y * gv * gv / (x * x);
  return h;
}

HTerms h_terms_xyx(const MonotoneFunction& f, double x, double y) {
  require_positive(x, y, 1.0);
  const double c = mc_function(f, x, y);
  const double gu = log_derivative(f, x / y);
  const double t = (1.0 - x * c) / ((x - y) * c);
  HTerms h{};
  h.h1 = -(1.0 - 2.0 * x * gu / y) / (2.0 * (x - y));
  h.h2 = t * t / x;
  h.h3 = h.h1;
  h.h4 = gu / (2.0 * y);
  return h;
}

double h_triple(const MonotoneFunction& f, double x) {
  if (!(x > 0.0)) throw std::domain_error("h: arguments must be positive");
  return (0.375 + 3.0 * f.jet(1.0, 2)[2]) / x;
}

double h_value(const MonotoneFunction& f, double x, double y, double z) {
  require_positive(x, y, z);
  const bool xy = coincide(x, y);
  const bool xz = coincide(x, z);
  const bool yz = coincide(y, z);
  if (xy && xz && yz) return h_triple(f, (x + y + z) / 3.0);
  if (xy && !xz && !yz) return h_terms_xxy(f, 0.5 * (x + y), z).combined();
  if (xz && !xy && !yz) return h_terms_xyx(f, 0.5 * (x + z), y).combined();
  if (yz && !xy && !xz) return h_terms_xyx(f, 0.5 * (y + z), x).combined();
  if (!xy && !xz && !yz) return h_terms_distinct(f, x, y, z).combined();
  // Two of the pairs coincide but not the third: the three values span a
  // window wider than the coincidence threshold only by rounding; treat as triple.
  return h_triple(f, (x + y + z) / 3.0);
}

double scalar_curvature(const MonotoneFunction& f, const Spectrum& s) {
  const std::size_t n = s.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j && j == k) continue;
        acc += h_value(f, s[i], s[j], s[k]);
      }
    }
  }
  if (!std::isfinite(acc)) throw std::runtime_error("scalar_curvature: non-finite kernel sum");
  return acc + spectral_constant(n);
}

double spectral_constant(std::size_t n) {
  const double nn = static_cast<double>(n * n);
  return 0.25 * (nn - 1.0) * (nn - 2.0);
}

bool is_more_mixed(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw std::invalid_argument("is_more_mixed: dimension mismatch");
  std::vector<double> sa(a.eigenvalues().begin(), a.eigenvalues().end());
  std::vector<double> sb(b.eigenvalues().begin(), b.eigenvalues().end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  double pa = 0.0;
  double pb = 0.0;
  for (std::size_t k = 0; k < sa.size(); ++k) {
    pa += sa[k];
    pb += sb[k];
    if (pa > pb + 1e-12) return false;
  }
  return true;
}

std::vector<MonotonicityViolation> monotonicity_scan(const MonotoneFunction& f,
                                                     std::span<const std::pair<Spectrum, Spectrum>> grid,
                                                     double tol) {
  std::vector<MonotonicityViolation> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& [more, less] = grid[i];
    if (!is_more_mixed(more, less)) {
      throw std::invalid_argument("monotonicity_scan: pair " + std::to_string(i) + " is not ordered by majorization");
    }
    const double r_more = scalar_curvature(f, more);
    const double r_less = scalar_curvature(f, less);
    if (r_more < r_less - tol) out.push_back({i, r_more, r_less});
  }
  return out;
}

std::vector<std::pair<Spectrum, Spectrum>> qubit_majorization_grid() {
  std::vector<Spectrum> states;
  for (int i = 0; i <= 9; ++i) {
    const double a = 0.1 * i;
    states.emplace_back(std::vector<double>{0.5 * (1.0 + a), 0.5 * (1.0 - a)});
  }
  std::vector<std::pair<Spectrum, Spectrum>> grid;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) grid.emplace_back(states[i], states[j]);
  }
  return grid;
}

}  // namespace monocurv
