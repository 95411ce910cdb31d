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

#ifndef MONOCURV_EXTREMUM_ANALYSIS_HPP
#define MONOCURV_EXTREMUM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <variant>

#include "monocurv/monotone_function.hpp"
#include "monocurv/symmetric_measure.hpp"

namespace monocurv {

/// r(a) = c0 + c2 a^2 + c4 a^4 + O(a^6) at the maximally mixed qubit.
struct SeriesExpansion {
  double c0;
  double c2;
  double c4;

  double evaluate(double a) const { return c0 + a * a * (c2 + a * a * c4); }
};

/// Coefficients from f''(1), f''''(1), f^(6)(1).
SeriesExpansion series_from_derivatives(double f2, double f4, double f6);
SeriesExpansion series_coefficients(const MonotoneFunction& f);
/// The same coefficients written through the moments of the pushed-forward measure.
SeriesExpansion series_from_moments(const MomentSummary& m);

/// c0, c2 recovered from samples of the closed form at
/// a = 0.1, 0.05, 0.025, 0.0125 by even polynomial interpolation.
struct SeriesCheck {
  SeriesExpansion analytic;
  double fitted_c0;
  double fitted_c2;
  double rel_error_c0;  // relative to max(|c|, 1)
  double rel_error_c2;
};

SeriesCheck series_cross_check(const MonotoneFunction& f);

enum class Verdict { kLocalMin, kLocalMax, kDegenerate };
enum class DecidedBy { kC2Sign, kC4Sign, kMomentCondition };

std::string to_string(Verdict v);
std::string to_string(DecidedBy d);

struct Classification {
  Verdict verdict;
  DecidedBy decided_by;
  SeriesExpansion values;
  std::optional<MomentSummary> moments;
};

/// m (3 - 2m) < 5 var: c2 > 0.
bool strict_moment_condition(const MomentSummary& m);
/// Sign condition on c4 when c2 = 0: 98 E3 < 28 m^3 + 70 m^2 + 42 m.
bool equality_moment_condition(const MomentSummary& m);
/// The c4 condition as it is usually printed, -44 m^3 + 70 m^2 + 114 m < 98 E3.
/// Kept for comparison; it does not follow from the series.
bool printed_equality_moment_condition(const MomentSummary& m);

/// Extremum type of r at a = 0. For measures the moment conditions decide
/// first and the series route must agree; disagreement throws std::logic_error.
Classification classify_origin(const SymmetricMeasure& mu);
Classification classify_origin(const MonotoneFunction& f);

/// 6 + 72 * integral of (t^2 - t).
double origin_curvature_from_measure(const SymmetricMeasure& mu);

/// 12 (int t(1-t))^2 - int t(t-1)(20t^2-40t+13); negative means local minimum.
double t_functional(const SymmetricMeasure& mu);

/// t of the one-pair measure (delta_p + delta_{1-p})/2.
double t_single_pair(double p);

/// Parameters of the two-pair measure (delta_p + delta_q + delta_{1-p} + delta_{1-q})/4.
struct FamilyParams {
  double p;
  double q;
};

void validate(const FamilyParams& params);

/// Lower end of the admissible p-interval, (7 - sqrt 7)/14.
double admissible_p_min();
/// p in ((7 - sqrt 7)/14, 1/2] and 0 <= q < 1/2.
bool in_family_range(const FamilyParams& params);

double t_double_pair(const FamilyParams& params);
/// The same quantity in u = pq, v = p + q.
double t_double_pair_uv(double u, double v);

struct BoundaryCurves {
  double h_p;     // the printed range bound h(p)
  double q_root;  // q(p) with t(p, q(p)) = 0
  double radicand;
  double (*u_of_v)(double);
};

/// u(v), the admissible root of t(u, v) = 0 with 0 < u < 1/4.
double boundary_u(double v);
BoundaryCurves boundary_curves(double p);

SymmetricMeasure family_measure(const FamilyParams& params);
/// The closed-form family function with an analytic jet.
MonotoneFunction family_function(const FamilyParams& params);

/// Volume of a small geodesic ball in the (n^2-1)-dimensional state space.
double geodesic_ball_volume(int n, double scal, double radius);

/// arccos(sqrt(p1 p2) + sqrt((1-p1)(1-p2))).
double classical_fisher_distance(double p1, double p2);

/// The q = 0 family at parameter p.
struct ZeroPairSummary {
  double c0_measure;      // 6 + 72 int (t^2 - t)
  double c0_moment;       // 6 + 36 f''(1) from the moment identity
  double c0_closed_limit; // a -> 0 limit of the closed form
  double c2_measured;
  double c2_expected;     // -20 p(1-p)(14p^2 - 14p + 3)
  double r1_limit;        // a -> 1 limit of the closed form
  double printed_c0;      // annotation: 9/2 - 36 p(1-p)
  double printed_r1;      // annotation: 7/2 + 1/(p(1-p))
};

ZeroPairSummary zero_pair_summary(double p);

/// a -> 0 limit of the explicit closed form, by even interpolation of
/// samples at a = 0.1, 0.05, 0.025, 0.0125.
double closed_form_origin_limit(const MonotoneFunction& f);

/// a -> 1 limit of the explicit closed form, by polynomial extrapolation
/// in 1 - a.
double closed_form_edge_limit(const MonotoneFunction& f);

}  // namespace monocurv

#endif  // MONOCURV_EXTREMUM_ANALYSIS_HPP
