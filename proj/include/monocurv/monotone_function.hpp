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

#ifndef MONOCURV_MONOTONE_FUNCTION_HPP
#define MONOCURV_MONOTONE_FUNCTION_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monocurv/symmetric_measure.hpp"

namespace monocurv {

inline constexpr int kMaxJetOrder = 6;

/// Derivatives f(x0), f'(x0), ..., f^(k)(x0).
struct TaylorJet {
  double base_point;
  std::vector<double> coefficients;

  double value() const { return coefficients.at(0); }
  double operator[](std::size_t k) const { return coefficients.at(k); }
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

enum class CatalogId {
  kSld,          // (1+x)/2
  kSmallest,     // 2x/(1+x)
  kKuboMori,     // (x-1)/log x
  kLogSquared,   // 2(x-1)^2 / ((1+x) log^2 x)
  kLogSqrt,      // 2(x-1) sqrt(x) / ((1+x) log x)
  kAlphaPower,   // 2 x^(alpha+1/2) / (1 + x^(2 alpha)),  alpha in [0, 1/2]
  kWyd,          // beta(1-beta)(x-1)^2 / ((x^beta - 1)(x^(1-beta) - 1)),  0 < |beta| < 1
};

struct CatalogEntry {
  CatalogId id;
  double parameter = 0.0;  // alpha or beta; unused for the fixed functions
};

/// Closed form supplied by the caller. Without an analytic jet, derivatives
/// come from Richardson-extrapolated central differences.
struct UserClosedForm {
  std::string label;
  std::function<double(double)> value;
  std::function<std::vector<double>(double, int)> jet;  // optional
};

using FunctionSource = std::variant<CatalogEntry, SymmetricMeasure, UserClosedForm>;

/**
 * Normalized symmetric operator monotone candidate f on (0, inf):
 * f(1) = 1 and f(x) = x f(1/x).
 *
 * Catalog and measure-backed functions satisfy this by construction. User
 * closed forms are checked on a grid at construction; operator monotonicity
 * itself cannot be checked from point values and is the caller's promise.
 */
class MonotoneFunction {
 public:
  explicit MonotoneFunction(CatalogEntry entry);
  explicit MonotoneFunction(SymmetricMeasure measure);
  explicit MonotoneFunction(UserClosedForm form);

  double operator()(double x) const;
  TaylorJet jet(double x, int order) const;

  const FunctionSource& source() const { return source_; }
  /// Non-null when the function is measure-backed.
  const SymmetricMeasure* measure() const { return std::get_if<SymmetricMeasure>(&source_); }
  std::string description() const;

 private:
  FunctionSource source_;
  // Catalog only: normalized Taylor coefficients about x = 1.
  std::shared_ptr<const std::vector<double>> unit_series_;
};

/// Catalog lookup by name: sld, bures, smallest, kubo_mori, log_squared,
/// log_sqrt, alpha_power, wyd. The last two take a parameter and default to
/// alpha = 1/4 and beta = 1/2.
MonotoneFunction catalog(std::string_view name, std::optional<double> parameter = std::nullopt);

/// Names accepted by catalog(), canonical spelling only.
std::vector<std::string> catalog_names();

/// The seven catalog functions at their reference parameters
/// (alpha = 1/4, beta = 1/2).
std::vector<MonotoneFunction> reference_catalog();

TaylorJet eval_jet(const MonotoneFunction& f, double x, int order);

MonotoneFunction function_from_measure(const SymmetricMeasure& mu);

/// f(x) - x f(1/x).
double symmetry_residual(const MonotoneFunction& f, double x);

}  // namespace monocurv

#endif  // MONOCURV_MONOTONE_FUNCTION_HPP
