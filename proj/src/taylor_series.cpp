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

#include "monocurv/taylor_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace monocurv {

TaylorSeries::TaylorSeries(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("TaylorSeries: empty coefficient list");
}

TaylorSeries TaylorSeries::variable(double x0, std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = x0;
  if (order >= 1) c[1] = 1.0;
  return TaylorSeries(std::move(c));
}

TaylorSeries TaylorSeries::constant(double value, std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = value;
  return TaylorSeries(std::move(c));
}

double TaylorSeries::derivative(std::size_t k) const {
  double factorial = 1.0;
  for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
  return factorial * c_.at(k);
}

TaylorSeries TaylorSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("TaylorSeries::truncated: order too high");
  return TaylorSeries(std::vector<double>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TaylorSeries TaylorSeries::differentiated() const {
  if (c_.size() == 1) return TaylorSeries({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return TaylorSeries(std::move(d));
}

double TaylorSeries::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TaylorSeries TaylorSeries::compose(const TaylorSeries& inner) const {
  if (inner[0] != 0.0) throw std::domain_error("TaylorSeries::compose: inner series must vanish at 0");
  TaylorSeries acc = constant(c_.back(), inner.order());
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    acc *= inner;
    acc += c_[k];
  }
  return acc;
}

TaylorSeries TaylorSeries::operator-() const {
  TaylorSeries out = *this;
  for (double& v : out.c_) v = -v;
  return out;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& rhs) {
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& rhs) {
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator*=(const TaylorSeries& rhs) {
  const std::size_t n = std::min(c_.size(), rhs.c_.size());
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += c_[j] * rhs.c_[k - j];
    out[k] = acc;
  }
  c_ = std::move(out);
  return *this;
}

TaylorSeries& TaylorSeries::operator/=(const TaylorSeries& rhs) {
  std::size_t n = std::min(c_.size(), rhs.c_.size());
  std::size_t shift = 0;
  while (shift < n && c_[shift] == 0.0 && rhs.c_[shift] == 0.0) ++shift;
  if (shift == n) throw std::domain_error("TaylorSeries: 0/0 beyond available order");
  const double d0 = rhs.c_[shift];
  if (d0 == 0.0) throw std::domain_error("TaylorSeries: division by a series with a pole");
  n -= shift;
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = c_[k + shift];
    for (std::size_t j = 1; j <= k; ++j) acc -= rhs.c_[j + shift] * out[k - j];
    out[k] = acc / d0;
  }
  c_ = std::move(out);
  return *this;
}

TaylorSeries& TaylorSeries::operator+=(double rhs) {
  c_[0] += rhs;
  return *this;
}

TaylorSeries& TaylorSeries::operator-=(double rhs) {
  c_[0] -= rhs;
  return *this;
}

TaylorSeries& TaylorSeries::operator*=(double rhs) {
  for (double& v : c_) v *= rhs;
  return *this;
}

TaylorSeries& TaylorSeries::operator/=(double rhs) {
  for (double& v : c_) v /= rhs;
  return *this;
}

TaylorSeries operator/(double lhs, const TaylorSeries& rhs) {
  return TaylorSeries::constant(lhs, rhs.order()) / rhs;
}

TaylorSeries exp(const TaylorSeries& s) {
  const std::size_t n = s.size();
  std::vector<double> e(n, 0.0);
  e[0] = std::exp(s[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * s[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return TaylorSeries(std::move(e));
}

TaylorSeries log(const TaylorSeries& s) {
  if (!(s[0] > 0.0)) throw std::domain_error("log: constant term must be positive");
  const std::size_t n = s.size();
  std::vector<double> l(n, 0.0);
  l[0] = std::log(s[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = s[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * s[k - j] / static_cast<double>(k);
    l[k] = acc / s[0];
  }
  return TaylorSeries(std::move(l));
}

TaylorSeries pow(const TaylorSeries& s, double p) {
  if (!(s[0] > 0.0)) throw std::domain_error("pow: constant term must be positive");
  const std::size_t n = s.size();
  std::vector<double> y(n, 0.0);
  y[0] = std::pow(s[0], p);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += ((p + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * s[j] * y[k - j];
    }
    y[k] = acc / (static_cast<double>(k) * s[0]);
  }
  return TaylorSeries(std::move(y));
}

TaylorSeries sqrt(const TaylorSeries& s) { return pow(s, 0.5); }

}  // namespace monocurv
