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

#include "monocurv/extremum_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "monocurv/finite_difference.hpp"
#include "monocurv/qubit_curvature.hpp"

namespace monocurv {

namespace {

constexpr double kTie = 1e-10;
constexpr std::array<double, 4> kOriginSamples = {0.1, 0.05, 0.025, 0.0125};
constexpr std::array<double, 4> kEdgeSamples = {2e-3, 1e-3, 5e-4, 2.5e-4};

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1.0);
}

std::array<double, 4> symmetric_origin_samples(const MonotoneFunction& f) {
  std::array<double, 4> v{};
  for (std::size_t i = 0; i < kOriginSamples.size(); ++i) {
    const double a = kOriginSamples[i];
    v[i] = 0.5 * (curvature_closed_form_direct(f, a) + curvature_closed_form_direct(f, -a));
  }
  return v;
}

Classification classify_series(const SeriesExpansion& s) {
  if (s.c2 > kTie) return {Verdict::kLocalMin, DecidedBy::kC2Sign, s, std::nullopt};
  if (s.c2 < -kTie) return {Verdict::kLocalMax, DecidedBy::kC2Sign, s, std::nullopt};
  if (s.c4 > kTie) return {Verdict::kLocalMin, DecidedBy::kC4Sign, s, std::nullopt};
  if (s.c4 < -kTie) return {Verdict::kLocalMax, DecidedBy::kC4Sign, s, std::nullopt};
  return {Verdict::kDegenerate, DecidedBy::kC4Sign, s, std::nullopt};
}

void check_family_range(double x, const char* name) {
  if (!(x >= 0.0 && x <= 0.5)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1/2]");
}

}  // namespace

SeriesExpansion series_from_derivatives(double f2, double f4, double f6) {
  const double c0 = 6.0 + 36.0 * f2;
  const double c2 = 100.0 / 3.0 * f4 - 140.0 * f2 - 120.0 * f2 * f2;
  const double c4 = 352.0 * f2 * f2 * f2 + 616.0 * f2 * f2 + 1092.0 * f2 - 1288.0 / 3.0 * f4 + 392.0 / 45.0 * f6 -
                    160.0 * f2 * f4;
  return {c0, c2, c4};
}

SeriesExpansion series_coefficients(const MonotoneFunction& f) {
  const TaylorJet j = f.jet(1.0, kMaxJetOrder);
  return series_from_derivatives(j[2], j[4], j[6]);
}

SeriesExpansion series_from_moments(const MomentSummary& s) {
  const double m = s.mean;
  const double e2 = s.second;
  const double e3 = s.third;
  return {6.0 - 18.0 * m, -30.0 * m + 50.0 * e2 - 30.0 * m * m,
          -44.0 * m * m * m - 86.0 * m * m - 42.0 * m + 140.0 * e2 + 120.0 * m * e2 - 98.0 * e3};
}

SeriesCheck series_cross_check(const MonotoneFunction& f) {
  const SeriesExpansion analytic = series_coefficients(f);
  const auto values = symmetric_origin_samples(f);
  const auto fit = fd::fit_even_polynomial(kOriginSamples, values);
  return {analytic, fit[0], fit[1], relative_error(fit[0], analytic.c0), relative_error(fit[1], analytic.c2)};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kLocalMin:
      return "LocalMin";
    case Verdict::kLocalMax:
      return "LocalMax";
    case Verdict::kDegenerate:
      return "Degenerate";
  }
  return "?";
}

std::string to_string(DecidedBy d) {
  switch (d) {
    case DecidedBy::kC2Sign:
      return "C2Sign";
    case DecidedBy::kC4Sign:
      return "C4Sign";
    case DecidedBy::kMomentCondition:
      return "MomentCondition";
  }
  return "?";
}

bool strict_moment_condition(const MomentSummary& s) {
  return s.mean * (3.0 - 2.0 * s.mean) < 5.0 * s.variance;
}

bool equality_moment_condition(const MomentSummary& s) {
  const double m = s.mean;
  return 98.0 * s.third < 28.0 * m * m * m + 70.0 * m * m + 42.0 * m;
}

bool printed_equality_moment_condition(const MomentSummary& s) {
  const double m = s.mean;
  return -44.0 * m * m * m + 70.0 * m * m + 114.0 * m < 98.0 * s.third;
}

Classification classify_origin(const MonotoneFunction& f) { return classify_series(series_coefficients(f)); }

Classification classify_origin(const SymmetricMeasure& mu) {
  const MomentSummary s = pushforward_moments(mu);
  const SeriesExpansion from_moments = series_from_moments(s);
  // c2 = 10 (5 var - m (3 - 2m)); the tie band matches the series route.
  const double margin = 10.0 * (5.0 * s.variance - s.mean * (3.0 - 2.0 * s.mean));
  Classification out;
  if (std::abs(margin) > kTie) {
    out = {strict_moment_condition(s) ? Verdict::kLocalMin : Verdict::kLocalMax, DecidedBy::kMomentCondition,
           from_moments, s};
  } else {
    const double c4 = 28.0 * s.mean * s.mean * s.mean + 70.0 * s.mean * s.mean + 42.0 * s.mean - 98.0 * s.third;
    if (c4 > kTie && equality_moment_condition(s)) {
      out = {Verdict::kLocalMin, DecidedBy::kMomentCondition, from_moments, s};
    } else {
      out = classify_series(from_moments);
      out.moments = s;
    }
  }
  const Classification series = classify_origin(function_from_measure(mu));
  if (series.verdict != out.verdict) {
    std::ostringstream msg;
    msg << "classify_origin: moment route says " << to_string(out.verdict) << " but series route says "
        << to_string(series.verdict);
    throw std::logic_error(msg.str());
  }
  out.values = series.values;
  return out;
}

double origin_curvature_from_measure(const SymmetricMeasure& mu) {
  return 6.0 + 72.0 * mu.integrate([](double t) { return t * t - t; });
}

double t_functional(const SymmetricMeasure& mu) {
  const double i1 = mu.integrate([](double t) { return t * (1.0 - t); });
  const double second = mu.integrate([](double t) { return t * (t - 1.0) * (20.0 * t * t - 40.0 * t + 13.0); });
  return 12.0 * i1 * i1 - second;
}

double t_single_pair(double p) {
  check_family_range(p, "p");
  return p * (1.0 - p) * (8.0 * p * p - 8.0 * p + 3.0);
}

void validate(const FamilyParams& params) {
  check_family_range(params.p, "p");
  check_family_range(params.q, "q");
}

double admissible_p_min() { return (7.0 - std::sqrt(7.0)) / 14.0; }

bool in_family_range(const FamilyParams& params) {
  return params.p > admissible_p_min() && params.p <= 0.5 && params.q >= 0.0 && params.q < 0.5;
}

double t_double_pair(const FamilyParams& params) {
  validate(params);
  const double p = params.p;
  const double q = params.q;
  const double p2 = p * p;
  const double q2 = q * q;
  return -7.0 * (p2 * p2 + q2 * q2) + 14.0 * (p2 * p + q2 * q) - 6.0 * p * q * (p + q - p * q - 1.0) -
         8.5 * (p2 + q2) + 1.5 * (p + q);
}

double t_double_pair_uv(double u, double v) {
  const double v2 = v * v;
  return -8.0 * u * u + (28.0 * v2 - 48.0 * v + 23.0) * u - (7.0 * v2 * v2 - 14.0 * v2 * v + 8.5 * v2 - 1.5 * v);
}

double boundary_u(double v) {
  const double v2 = v * v;
  const double disc = 560.0 * v2 * v2 - 2240.0 * v2 * v + 3320.0 * v2 - 2160.0 * v + 529.0;
  if (disc < 0.0) throw std::domain_error("boundary_u: negative discriminant");
  return 1.75 * v2 - 3.0 * v + 23.0 / 16.0 - std::sqrt(disc) / 16.0;
}

BoundaryCurves boundary_curves(double p) {
  if (!(p > admissible_p_min() && p <= 0.5)) {
    throw std::invalid_argument("boundary_curves: p must lie in ((7 - sqrt 7)/14, 1/2]");
  }
  const double p2 = p * p;
  const double radicand = -640.0 * p2 * p2 + 1280.0 * p2 * p - 880.0 * p2 + 240.0 * p + 9.0;
  const double root = std::sqrt(radicand);
  const double h = std::sqrt(14.0 * p2 - 14.0 * p + 4.0 + root) / (2.0 * std::sqrt(7.0));
  const double q = 0.5 - std::sqrt(84.0 * p2 - 84.0 * p + 28.0 + 7.0 * root) / 14.0;
  return {h, q, radicand, &boundary_u};
}

SymmetricMeasure family_measure(const FamilyParams& params) {
  validate(params);
  if (params.p == params.q) return SymmetricMeasure::dirac_pair(params.p);
  std::vector<Atom> atoms;
  for (double t : {params.p, params.q}) atoms.push_back({t, t == 0.5 ? 0.5 : 0.25});
  return SymmetricMeasure::from_half(std::move(atoms));
}

MonotoneFunction family_function(const FamilyParams& params) {
  validate(params);
  const double p = params.p;
  const double q = params.q;
  UserClosedForm form;
  std::ostringstream label;
  label.precision(17);
  label << "family(p=" << p << ",q=" << q << ")";
  form.label = label.str();
  form.value = [p, q](double x) {
    return 0.25 * x * (1.0 / (p * x + 1.0 - p) + 1.0 / ((1.0 - p) * x + p) + 1.0 / (q * x + 1.0 - q) +
                       1.0 / ((1.0 - q) * x + q));
  };
  // Each term x / ((1-t) x + t) has k-th derivative (-1)^(k+1) k! t (1-t)^(k-1) / ((1-t) x + t)^(k+1).
  form.jet = [p, q](double x, int order) {
    std::vector<double> out(order + 1, 0.0);
    for (double t : {p, 1.0 - p, q, 1.0 - q}) {
      const double d = (1.0 - t) * x + t;
      out[0] += 0.25 * x / d;
      double factorial = 1.0;
      for (int k = 1; k <= order; ++k) {
        factorial *= k;
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        out[k] += 0.25 * sign * factorial * t * std::pow(1.0 - t, k - 1) / std::pow(d, k + 1);
      }
    }
    return out;
  };
  return MonotoneFunction(std::move(form));
}

double geodesic_ball_volume(int n, double scal, double radius) {
  if (n < 2) throw std::invalid_argument("geodesic_ball_volume: n must be at least 2");
  if (!(radius > 0.0)) throw std::invalid_argument("geodesic_ball_volume: radius must be positive");
  const double d = static_cast<double>(n * n - 1);
  const double nn1 = static_cast<double>(n * n + 1);
  return std::pow(std::numbers::pi, 0.5 * d) * std::pow(radius, d) / std::tgamma(0.5 * nn1) *
         (1.0 - scal * radius * radius / (6.0 * nn1));
}

double classical_fisher_distance(double p1, double p2) {
  if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0)) {
    throw std::invalid_argument("classical_fisher_distance: probabilities must lie in [0, 1]");
  }
  const double overlap = std::sqrt(p1 * p2) + std::sqrt((1.0 - p1) * (1.0 - p2));
  return std::acos(std::clamp(overlap, -1.0, 1.0));
}

double closed_form_origin_limit(const MonotoneFunction& f) {
  const auto values = symmetric_origin_samples(f);
  return fd::fit_even_polynomial(kOriginSamples, values)[0];
}

double closed_form_edge_limit(const MonotoneFunction& f) {
  std::array<double, 4> values{};
  for (std::size_t i = 0; i < kEdgeSamples.size(); ++i) {
    values[i] = curvature_closed_form_direct(f, 1.0 - kEdgeSamples[i]);
  }
  // Neville at 0 in the plain step.
  std::array<double, 4> p = values;
  for (std::size_t level = 1; level < p.size(); ++level) {
    for (std::size_t i = p.size() - 1; i >= level; --i) {
      const double hi = kEdgeSamples[i];
      const double hj = kEdgeSamples[i - level];
      p[i] = (hi * p[i - 1] - hj * p[i]) / (hi - hj);
    }
  }
  return p.back();
}

ZeroPairSummary zero_pair_summary(double p) {
  const FamilyParams params{p, 0.0};
  const SymmetricMeasure mu = family_measure(params);
  const MonotoneFunction f = family_function(params);
  const MomentSummary s = pushforward_moments(mu);
  const double pq = p * (1.0 - p);
  ZeroPairSummary out{};
  out.c0_measure = origin_curvature_from_measure(mu);
  out.c0_moment = 6.0 + 36.0 * (-0.5 * s.mean);
  out.c0_closed_limit = closed_form_origin_limit(f);
  out.c2_measured = series_coefficients(f).c2;
  out.c2_expected = -20.0 * pq * (14.0 * p * p - 14.0 * p + 3.0);
  out.r1_limit = closed_form_edge_limit(f);
  out.printed_c0 = 4.5 - 36.0 * pq;
  out.printed_r1 = 3.5 + 1.0 / pq;
  return out;
}

}  // namespace monocurv
