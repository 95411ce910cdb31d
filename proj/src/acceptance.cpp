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

#include "monocurv/acceptance.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "monocurv/extremum_analysis.hpp"
#include "monocurv/nlevel_curvature.hpp"
#include "monocurv/qubit_curvature.hpp"

namespace monocurv::acceptance {

namespace {

constexpr std::array<double, 7> kPositiveGrid = {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95};
constexpr std::array<double, 4> kFamilyP = {0.35, 0.40, 0.45, 0.50};

std::vector<double> signed_grid() {
  std::vector<double> out;
  for (double a : kPositiveGrid) {
    out.push_back(-a);
    out.push_back(a);
  }
  return out;
}

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Relative with a floor of 1; the kernel part vanishes identically for some functions.
double floored(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

// n = 3 example function; atoms at 0.001 and 0.999 with weight 1/4 each and
// at 1/2 with weight 1/2.
MonotoneFunction three_level_function() {
  return function_from_measure(SymmetricMeasure::from_half({{0.001, 0.25}, {0.5, 0.5}}));
}

}  // namespace

CriterionResult origin_values() {
  const double sld = curvature_closed_form(catalog("sld"), 0.0);
  const double smallest = curvature_closed_form(catalog("smallest"), 0.0);
  const bool ok = std::abs(sld - 6.0) <= 1e-9 && std::abs(smallest + 12.0) <= 1e-9;
  return {1, "origin values", ok, fmt::format("r_sld(0)={:.17g} r_smallest(0)={:.17g} tol=1e-9", sld, smallest)};
}

CriterionResult three_path_agreement() {
  double worst = 0.0;
  std::string where;
  for (const MonotoneFunction& f : reference_catalog()) {
    for (double a : signed_grid()) {
      const CurvatureSample s = curvature_sample(f, a);
      if (s.max_rel_disagreement > worst) {
        worst = s.max_rel_disagreement;
        where = fmt::format("{} a={}", f.description(), a);
      }
    }
  }
  return {2, "three-path agreement", worst < 1e-6,
          fmt::format("7 functions x 14 points, max relative disagreement {:.3e} at {} (tol 1e-6)", worst, where)};
}

CriterionResult series_verification() {
  double worst_c0 = 0.0;
  double worst_c2 = 0.0;
  double worst_pole = 0.0;
  const double a = 1e-3;
  for (const MonotoneFunction& f : reference_catalog()) {
    const SeriesCheck c = series_cross_check(f);
    worst_c0 = std::max(worst_c0, c.rel_error_c0);
    worst_c2 = std::max(worst_c2, c.rel_error_c2);
    const auto laurent = closed_form_laurent(f);
    double m2 = 0.0;
    double m1 = 0.0;
    for (const auto& s : laurent) {
      m2 += s[0];
      m1 += s[1];
    }
    worst_pole = std::max(worst_pole, std::abs(m2 / (a * a) + m1 / a));
  }
  const bool ok = worst_c0 < 1e-4 && worst_c2 < 1e-4 && worst_pole < 1e-8;
  return {3, "series verification", ok,
          fmt::format("max rel err c0={:.3e} c2={:.3e} (tol 1e-4); pole residue at a=1e-3 {:.3e} (tol 1e-8)", worst_c0,
                      worst_c2, worst_pole)};
}

CriterionResult moment_identities() {
  std::mt19937_64 rng(20240531);
  std::uniform_real_distribution<double> location(0.0, 0.5);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::uniform_int_distribution<int> count(1, 5);
  double worst_f1 = 0.0;
  double worst_even = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Atom> atoms(count(rng));
    double total = 0.0;
    for (Atom& atom : atoms) {
      atom = {location(rng), weight(rng)};
      total += 2.0 * atom.weight;
    }
    for (Atom& atom : atoms) atom.weight /= total;
    const SymmetricMeasure mu = SymmetricMeasure::from_half(atoms);
    const MomentSummary s = pushforward_moments(mu);
    worst_f1 = std::max(worst_f1, std::abs(derivatives_at_one(mu, 1) - 0.5));
    worst_even = std::max({worst_even, std::abs(derivatives_at_one(mu, 2) + 0.5 * s.mean),
                           std::abs(derivatives_at_one(mu, 4) - (-3.0 * s.mean + 1.5 * s.second)),
                           std::abs(derivatives_at_one(mu, 6) - (-90.0 * s.mean - 11.25 * s.third + 90.0 * s.second))});
  }
  const bool ok = worst_f1 <= 1e-12 && worst_even <= 1e-10;
  return {4, "moment identities", ok,
          fmt::format("10 random atomic measures: |f'(1)-1/2| max {:.3e} (tol 1e-12), even orders max {:.3e} (tol 1e-10)",
                      worst_f1, worst_even)};
}

CriterionResult family_minimum() {
  bool ok = true;
  std::string failures;
  double worst_root = 0.0;
  double worst_c2 = 0.0;
  for (double p : kFamilyP) {
    const BoundaryCurves b = boundary_curves(p);
    const double root = std::abs(t_double_pair({p, b.q_root}));
    worst_root = std::max(worst_root, root);
    if (root >= 1e-8) {
      ok = false;
      failures += fmt::format(" |t(p,q(p))|={:.3e}@p={}", root, p);
    }
    for (double q : {0.0, 0.01}) {
      const Classification c = classify_origin(family_measure({p, q}));
      const double t = t_double_pair({p, q});
      if (c.verdict != Verdict::kLocalMin || !(t < 0.0)) {
        ok = false;
        failures += fmt::format(" (p={},q={}): verdict {} t={:.6g} c2={:.6g} q(p)={:.6g};", p, q,
                                to_string(c.verdict), t, c.values.c2, b.q_root);
      }
    }
    const ZeroPairSummary z = zero_pair_summary(p);
    const double err = std::abs(z.c2_measured - z.c2_expected);
    worst_c2 = std::max(worst_c2, err);
    if (err > 1e-9) {
      ok = false;
      failures += fmt::format(" c2 mismatch {:.3e}@p={}", err, p);
    }
  }
  std::string detail = fmt::format("8 (p,q) points; max |t(p,q(p))| {:.3e}; max q=0 c2 error {:.3e}", worst_root, worst_c2);
  if (!failures.empty()) detail += "; failing:" + failures;
  return {5, "two-pair family minimum", ok, detail};
}

CriterionResult single_pair_positivity() {
  double smallest = INFINITY;
  for (int i = 1; i <= 10; ++i) smallest = std::min(smallest, t_single_pair(0.05 * i));
  return {6, "one-pair positivity", smallest > 0.0,
          fmt::format("min t(p) over p=0.05..0.50 is {:.6g}", smallest)};
}

CriterionResult non_monotone_exhibit() {
  const auto grid = qubit_majorization_grid();
  const auto family = monotonicity_scan(family_function({0.45, 0.0}), grid);
  const auto km = monotonicity_scan(catalog("kubo_mori"), grid);
  const auto sld = monotonicity_scan(catalog("sld"), grid);
  const bool ok = !family.empty() && km.empty() && sld.empty();
  return {7, "non-monotone curvature", ok,
          fmt::format("violations over {} pairs: family(0.45,0)={} kubo_mori={} sld={}", grid.size(), family.size(),
                      km.size(), sld.size())};
}

CriterionResult spectral_reduction() {
  double worst = 0.0;
  double worst_split = 0.0;
  for (const MonotoneFunction& f : reference_catalog()) {
    for (double a : signed_grid()) {
      const Spectrum s({0.5 * (1.0 + a), 0.5 * (1.0 - a)});
      const double dittmann = scalar_curvature(f, s);
      worst = std::max(worst, relative(dittmann, curvature_closed_form(f, a)));
      const SumFunctions sh = sum_functions_from_limits(f, s[0], s[1]);
      const double kernel = sh.sh1 - 0.5 * sh.sh2 + 2.0 * sh.sh3 - sh.sh4;
      worst_split = std::max(worst_split, floored(dittmann - spectral_constant(2), kernel));
    }
  }
  const double constant = spectral_constant(2);
  const bool ok = worst < 1e-6 && constant == 1.5 && worst_split < 1e-9;
  return {8, "n=2 spectral reduction", ok,
          fmt::format("max rel diff to closed form {:.3e} (tol 1e-6); constant {}; kernel split {:.3e}", worst,
                      constant, worst_split)};
}

CriterionResult three_level_minimum() {
  const MonotoneFunction f = three_level_function();
  const double third = 1.0 / 3.0;
  const double r0 = scalar_curvature(f, Spectrum({third, third, 1.0 - 2.0 * third}));
  const std::array<std::array<double, 3>, 2> directions = {
      std::array<double, 3>{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
      std::array<double, 3>{1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
  bool ok = true;
  std::string detail = fmt::format("r(uniform)={:.10g};", r0);
  for (std::size_t d = 0; d < directions.size(); ++d) {
    for (double delta : {1e-2, 5e-3}) {
      auto at = [&](double sign) {
        std::vector<double> v(3);
        for (int i = 0; i < 2; ++i) v[i] = third + sign * delta * directions[d][i];
        v[2] = 1.0 - v[0] - v[1];
        return scalar_curvature(f, Spectrum(v));
      };
      const double second = at(1.0) - 2.0 * r0 + at(-1.0);
      if (delta == 1e-2 && !(second > 0.0)) ok = false;
      detail += fmt::format(" dir{} delta={} d2r={:.4e}", d + 1, delta, second);
    }
  }
  return {9, "n=3 local minimum", ok, detail};
}

CriterionResult zero_pair_ledger() {
  bool ok = true;
  std::string detail;
  for (double p : kFamilyP) {
    const ZeroPairSummary z = zero_pair_summary(p);
    const double spread = std::max({std::abs(z.c0_measure - z.c0_moment), std::abs(z.c0_measure - z.c0_closed_limit),
                                    std::abs(z.c0_moment - z.c0_closed_limit)});
    if (spread > 1e-9) ok = false;
    detail += fmt::format(" p={}: r(0)={:.12g} spread={:.2e} [printed {:.6g}], r(1)={:.10g} [printed {:.6g}];", p,
                          z.c0_measure, spread, z.printed_c0, z.r1_limit, z.printed_r1);
  }
  return {10, "q=0 family ledger", ok, "three routes to r(0) agree within 1e-9;" + detail};
}

std::vector<CriterionResult> run_all() {
  return {origin_values(),        three_path_agreement(), series_verification(), moment_identities(),
          family_minimum(),       single_pair_positivity(), non_monotone_exhibit(), spectral_reduction(),
          three_level_minimum(), zero_pair_ledger()};
}

std::string format(const CriterionResult& r) {
  return fmt::format("[{}] {} {}: {}", r.passed ? "PASS" : "FAIL", r.id, r.title, r.detail);
}

}  // namespace monocurv::acceptance
