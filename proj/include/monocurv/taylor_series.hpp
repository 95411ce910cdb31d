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

#ifndef MONOCURV_TAYLOR_SERIES_HPP
#define MONOCURV_TAYLOR_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace monocurv {

/// Truncated power series  sum_k c_k t^k  around an (implicit) base point.
///
/// Coefficients are normalized Taylor coefficients, c_k = f^(k)(x0) / k!.
/// Arithmetic truncates to the shorter operand. Division strips leading
/// coefficients that are exactly zero in both operands, which resolves
/// removable singularities such as (x-1)/log(x) at x0 = 1; every stripped
/// coefficient shortens the result by one order.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  explicit TaylorSeries(std::vector<double> coefficients);

  /// The identity map x = x0 + t.
  static TaylorSeries variable(double x0, std::size_t order);
  static TaylorSeries constant(double value, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  std::span<const double> coefficients() const { return c_; }

  /// k-th derivative at the base point, k! * c_k.
  double derivative(std::size_t k) const;

  /// Series truncated to the given order (must not exceed order()).
  TaylorSeries truncated(std::size_t order) const;

  /// d/dt of the series; loses one order.
  TaylorSeries differentiated() const;

  /// Evaluates the polynomial at offset t from the base point.
  double evaluate(double t) const;

  /// Composition this(inner) for an inner series with zero constant term.
  TaylorSeries compose(const TaylorSeries& inner) const;

  TaylorSeries operator-() const;
  TaylorSeries& operator+=(const TaylorSeries& rhs);
  TaylorSeries& operator-=(const TaylorSeries& rhs);
  TaylorSeries& operator*=(const TaylorSeries& rhs);
  TaylorSeries& operator/=(const TaylorSeries& rhs);
  TaylorSeries& operator+=(double rhs);
  TaylorSeries& operator-=(double rhs);
  TaylorSeries& operator*=(double rhs);
  TaylorSeries& operator/=(double rhs);

  friend TaylorSeries operator+(TaylorSeries lhs, const TaylorSeries& rhs) { return lhs += rhs; }
  friend TaylorSeries operator-(TaylorSeries lhs, const TaylorSeries& rhs) { return lhs -= rhs; }
  friend TaylorSeries operator*(TaylorSeries lhs, const TaylorSeries& rhs) { return lhs *= rhs; }
  friend TaylorSeries operator/(TaylorSeries lhs, const TaylorSeries& rhs) { return lhs /= rhs; }
  friend TaylorSeries operator+(TaylorSeries lhs, double rhs) { return lhs += rhs; }
  friend TaylorSeries operator-(TaylorSeries lhs, double rhs) { return lhs -= rhs; }
  friend TaylorSeries operator*(TaylorSeries lhs, double rhs) { return lhs *= rhs; }
  friend TaylorSeries operator/(TaylorSeries lhs, double rhs) { return lhs /= rhs; }
  friend TaylorSeries operator+(double lhs, TaylorSeries rhs) { return rhs += lhs; }
  friend TaylorSeries operator-(double lhs, const TaylorSeries& rhs) { return (-rhs) += lhs; }
  friend TaylorSeries operator*(double lhs, TaylorSeries rhs) { return rhs *= lhs; }
  friend TaylorSeries operator/(double lhs, const TaylorSeries& rhs);

 private:
  std::vector<double> c_{0.0};
};

TaylorSeries exp(const TaylorSeries& s);
/// Requires a strictly positive constant term.
TaylorSeries log(const TaylorSeries& s);
/// s^p for real p; requires a strictly positive constant term.
TaylorSeries pow(const TaylorSeries& s, double p);
TaylorSeries sqrt(const TaylorSeries& s);

}  // namespace monocurv

#endif  // MONOCURV_TAYLOR_SERIES_HPP
