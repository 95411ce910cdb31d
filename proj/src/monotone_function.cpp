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

#include "monocurv/monotone_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "monocurv/finite_difference.hpp"
#include "monocurv/taylor_series.hpp"

namespace monocurv {

namespace {

// Order of the cached expansion about x = 1 and the radius inside which it
// replaces direct evaluation.
constexpr std::size_t kUnitSeriesOrder = 60;
constexpr double kUnitSeriesRadius = 0.25;

constexpr double kReferenceAlpha = 0.25;
constexpr double kReferenceBeta = 0.5;

double power(double x, double p) { return std::pow(x, p); }
double logarithm(double x) { return std::log(x); }
double square_root(double x) { return std::sqrt(x); }
TaylorSeries power(const TaylorSeries& x, double p) { return pow(x, p); }
TaylorSeries logarithm(const TaylorSeries& x) { return log(x); }
TaylorSeries square_root(const TaylorSeries& x) { return sqrt(x); }

template <class T>
T catalog_formula(const CatalogEntry& e, const T& x) {
  switch (e.id) {
    case CatalogId::kSld:
      return (x + 1.0) * 0.5;
    case CatalogId::kSmallest:
      return 2.0 * x / (x + 1.0);
    case CatalogId::kKuboMori:
      return (x - 1.0) / logarithm(x);
    case CatalogId::kLogSquared: {
      const T lx = logarithm(x);
      return 2.0 * (x - 1.0) * (x - 1.0) / ((x + 1.0) * lx * lx);
    }
    case CatalogId::kLogSqrt:
      return 2.0 * (x - 1.0) * square_root(x) / ((x + 1.0) * logarithm(x));
    case CatalogId::kAlphaPower: {
      const double a = e.parameter;
      return 2.0 * power(x, a + 0.5) / (power(x, 2.0 * a) + 1.0);
    }
    case CatalogId::kWyd: {
      const double b = e.parameter;
      return b * (1.0 - b) * (x - 1.0) * (x - 1.0) / ((power(x, b) - 1.0) * (power(x, 1.0 - b) - 1.0));
    }
  }
  throw std::logic_error("unknown catalog id");
}

// Normalized coefficients of f about x = 1. Exact-zero stripping in the
// series division cancels the removable singularities; the variable is
// padded so every formula keeps the full order.
std::vector<double> unit_series(const CatalogEntry& e) {
  const TaylorSeries s = catalog_formula(e, TaylorSeries::variable(1.0, kUnitSeriesOrder + 2));
  const auto c = s.coefficients();
  return std::vector<double>(c.begin(), c.begin() + kUnitSeriesOrder + 1);
}

// k-th derivative at 1 + d of the series sum c_n d^n.
double series_derivative(const std::vector<double>& c, double d, int k) {
  double acc = 0.0;
  for (std::size_t n = c.size(); n-- > static_cast<std::size_t>(k);) {
    double falling = 1.0;
    for (int i = 0; i < k; ++i) falling *= static_cast<double>(n - i);
    acc = acc * d + falling * c[n];
  }
  return acc;
}

void validate_catalog(const CatalogEntry& e) {
  if (e.id == CatalogId::kAlphaPower && !(e.parameter >= 0.0 && e.parameter <= 0.5)) {
    throw std::invalid_argument("alpha_power: alpha must lie in [0, 1/2]");
  }
  if (e.id == CatalogId::kWyd && !(e.parameter > -1.0 && e.parameter < 1.0 && e.parameter != 0.0)) {
    throw std::invalid_argument("wyd: beta must lie in (-1, 1) and differ from 0");
  }
}

double measure_value(const SymmetricMeasure& mu, double x) {
  return mu.integrate([x](double t) { return x / ((1.0 - t) * x + t); });
}

double measure_derivative(const SymmetricMeasure& mu, double x, int k) {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * mu.integrate([x, k](double t) {
    const double denom = (1.0 - t) * x + t;
    return t * std::pow(1.0 - t, k - 1) / std::pow(denom, k + 1);
  });
}

std::vector<double> finite_difference_jet(const std::function<double(double)>& f, double x, int order) {
  std::vector<double> out(order + 1);
  out[0] = f(x);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k <= order; ++k) {
    const double h = 2.0 * x * std::pow(eps, 1.0 / (k + 6));
    out[k] = fd::richardson_derivative(f, x, k, std::min(h, x / (k + 1)), 3);
  }
  return out;
}

void validate_user_form(const UserClosedForm& form) {
  if (!form.value) throw std::invalid_argument("user closed form: missing evaluator");
  const double at_one = form.value(1.0);
  if (std::abs(at_one - 1.0) > 1e-12) throw std::invalid_argument("user closed form: f(1) != 1");
  for (int i = -12; i <= 12; ++i) {
    const double x = std::pow(10.0, 0.5 * i);
    const double fx = form.value(x);
    if (!(fx > 0.0)) throw std::invalid_argument("user closed form: f must be positive");
    const double residual = fx - x * form.value(1.0 / x);
    if (std::abs(residual) > 1e-10 * std::max(1.0, std::abs(fx))) {
      throw std::invalid_argument("user closed form: f(x) != x f(1/x)");
    }
  }
}

}  // namespace

MonotoneFunction::MonotoneFunction(CatalogEntry entry) : source_(entry) {
  validate_catalog(entry);
  unit_series_ = std::make_shared<const std::vector<double>>(unit_series(entry));
}

MonotoneFunction::MonotoneFunction(SymmetricMeasure measure) : source_(std::move(measure)) {}

MonotoneFunction::MonotoneFunction(UserClosedForm form) : source_(std::move(form)) {
  validate_user_form(std::get<UserClosedForm>(source_));
}

double MonotoneFunction::operator()(double x) const {
  if (!(x > 0.0)) throw std::domain_error("monotone function evaluated at non-positive x");
  if (const auto* e = std::get_if<CatalogEntry>(&source_)) {
    if (std::abs(x - 1.0) < kUnitSeriesRadius) return series_derivative(*unit_series_, x - 1.0, 0);
    return catalog_formula(*e, x);
  }
  if (const auto* mu = std::get_if<SymmetricMeasure>(&source_)) return measure_value(*mu, x);
  return std::get<UserClosedForm>(source_).value(x);
}

TaylorJet MonotoneFunction::jet(double x, int order) const {
  if (!(x > 0.0)) throw std::domain_error("eval_jet: x must be positive");
  if (order < 0 || order > kMaxJetOrder) throw std::invalid_argument("eval_jet: order must be in 0..6");
  TaylorJet out{x, std::vector<double>(order + 1)};
  if (const auto* e = std::get_if<CatalogEntry>(&source_)) {
    if (std::abs(x - 1.0) < kUnitSeriesRadius) {
      for (int k = 0; k <= order; ++k) out.coefficients[k] = series_derivative(*unit_series_, x - 1.0, k);
    } else {
      const TaylorSeries s = catalog_formula(*e, TaylorSeries::variable(x, order));
      for (int k = 0; k <= order; ++k) out.coefficients[k] = s.derivative(k);
    }
    return out;
  }
  if (const auto* mu = std::get_if<SymmetricMeasure>(&source_)) {
    out.coefficients[0] = measure_value(*mu, x);
    for (int k = 1; k <= order; ++k) out.coefficients[k] = measure_derivative(*mu, x, k);
    return out;
  }
  const auto& form = std::get<UserClosedForm>(source_);
  out.coefficients = form.jet ? form.jet(x, order) : finite_difference_jet(form.value, x, order);
  if (out.coefficients.size() != static_cast<std::size_t>(order + 1)) {
    throw std::runtime_error("user closed form: jet has the wrong length");
  }
  return out;
}

std::string MonotoneFunction::description() const {
  std::ostringstream out;
  out.precision(17);
  if (const auto* e = std::get_if<CatalogEntry>(&source_)) {
    static const char* names[] = {"sld", "smallest", "kubo_mori", "log_squared", "log_sqrt", "alpha_power", "wyd"};
    out << "catalog:" << names[static_cast<int>(e->id)];
    if (e->id == CatalogId::kAlphaPower || e->id == CatalogId::kWyd) out << ':' << e->parameter;
  } else if (const auto* mu = std::get_if<SymmetricMeasure>(&source_)) {
    out << "measure(" << mu->half_atoms().size() << " atoms, " << mu->half_bins().size() << " bins)";
  } else {
    out << "user:" << std::get<UserClosedForm>(source_).label;
  }
  return out.str();
}

MonotoneFunction catalog(std::string_view name, std::optional<double> parameter) {
  auto fixed = [&](CatalogId id) {
    if (parameter) throw std::invalid_argument(std::string(name) + " takes no parameter");
    return MonotoneFunction(CatalogEntry{id, 0.0});
  };
  if (name == "sld" || name == "bures") return fixed(CatalogId::kSld);
  if (name == "smallest") return fixed(CatalogId::kSmallest);
  if (name == "kubo_mori") return fixed(CatalogId::kKuboMori);
  if (name == "log_squared") return fixed(CatalogId::kLogSquared);
  if (name == "log_sqrt") return fixed(CatalogId::kLogSqrt);
  if (name == "alpha_power") return MonotoneFunction(CatalogEntry{CatalogId::kAlphaPower, parameter.value_or(kReferenceAlpha)});
  if (name == "wyd") return MonotoneFunction(CatalogEntry{CatalogId::kWyd, parameter.value_or(kReferenceBeta)});
  throw std::invalid_argument("unknown catalog function: " + std::string(name));
}

std::vector<std::string> catalog_names() {
  return {"sld", "smallest", "kubo_mori", "log_squared", "log_sqrt", "alpha_power", "wyd"};
}

std::vector<MonotoneFunction> reference_catalog() {
  std::vector<MonotoneFunction> out;
  for (const std::string& name : catalog_names()) out.push_back(catalog(name));
  return out;
}

TaylorJet eval_jet(const MonotoneFunction& f, double x, int order) { return f.jet(x, order); }

MonotoneFunction function_from_measure(const SymmetricMeasure& mu) { return MonotoneFunction(mu); }

double symmetry_residual(const MonotoneFunction& f, double x) {
  if (!(x > 0.0)) throw std::domain_error("symmetry_residual: x must be positive");
  return f(x) - x * f(1.0 / x);
}

}  // namespace monocurv
