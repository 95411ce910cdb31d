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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "monocurv/extremum_analysis.hpp"
#include "monocurv/finite_difference.hpp"
#include "monocurv/qubit_curvature.hpp"

using namespace monocurv;
using doctest::Approx;

TEST_CASE("spectrum validation and parsing") {
  CHECK_THROWS(Spectrum({1.0}));
  CHECK_THROWS(Spectrum({0.5, 0.6}));
  CHECK_THROWS(Spectrum({1.2, -0.2}));
  CHECK(Spectrum::parse("0.5, 0.3,0.2").size() == 3);
  CHECK(Spectrum::parse("0.5,0.5000000001")[0] == Approx(0.5));
  CHECK_THROWS(Spectrum::parse("0.5,0.3"));
  CHECK_THROWS(Spectrum::parse("0.5,x"));
  CHECK_THROWS(Spectrum::parse("0.5,0.5,"));
}

TEST_CASE("spectral constant") {
  CHECK(spectral_constant(2) == 1.5);
  CHECK(spectral_constant(3) == 14.0);
}

TEST_CASE("pair limits agree with extrapolated distinct values") {
  for (const MonotoneFunction& f : {catalog("sld"), catalog("kubo_mori"), catalog("wyd", 0.3)}) {
    auto xxy = [&](double e) { return h_terms_distinct(f, 0.4 + e, 0.4 - e, 0.2).combined(); };
    // h is not symmetric under x <-> z, so average out the odd part
    auto xyx = [&](double e) {
      return 0.5 * (h_terms_distinct(f, 0.4 + e, 0.2, 0.4 - e).combined() +
                    h_terms_distinct(f, 0.4 - e, 0.2, 0.4 + e).combined());
    };
    const std::array<double, 3> steps = {1e-3, 5e-4, 2.5e-4};
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    for (int i = 0; i < 3; ++i) {
      a[i] = xxy(steps[i]);
      b[i] = xyx(steps[i]);
    }
    CHECK(h_terms_xxy(f, 0.4, 0.2).combined() == Approx(fd::extrapolate_to_zero(steps, a)).epsilon(1e-7));
    CHECK(h_terms_xyx(f, 0.4, 0.2).combined() == Approx(fd::extrapolate_to_zero(steps, b)).epsilon(1e-7));
    CHECK(h_value(f, 0.2, 0.4, 0.4) == Approx(h_terms_xyx(f, 0.4, 0.2).combined()));
  }
}

TEST_CASE("triple limit agrees with extrapolated pair limits") {
  for (const MonotoneFunction& f : {catalog("smallest"), catalog("log_sqrt")}) {
    const double x = 1.0 / 3.0;
    auto around = [&](double e) {
      return h_terms_distinct(f, x + e, x - 0.5 * e, x - 0.25 * e).combined();
    };
    const std::array<double, 3> steps = {2e-3, 1e-3, 5e-4};
    std::array<double, 3> v{};
    for (int i = 0; i < 3; ++i) v[i] = 0.5 * (around(steps[i]) + around(-steps[i]));
    CHECK(h_triple(f, x) == Approx(fd::extrapolate_to_zero(steps, v)).epsilon(1e-6));
  }
}

TEST_CASE("n = 2 reduces to the qubit closed form") {
  CHECK(scalar_curvature(catalog("smallest"), Spectrum({0.75, 0.25})) ==
        Approx(curvature_closed_form(catalog("smallest"), 0.5)).epsilon(1e-6));
  for (const MonotoneFunction& f : reference_catalog()) {
    for (int i = 1; i <= 9; ++i) {
      const double a = 0.1 * i;
      const double r = curvature_closed_form(f, a);
      CHECK(std::abs(scalar_curvature(f, Spectrum({0.5 * (1 + a), 0.5 * (1 - a)})) - r) <=
            1e-6 * std::max(std::abs(r), 1e-3));
    }
    CHECK(scalar_curvature(f, Spectrum({0.5, 0.5})) == Approx(curvature_closed_form(f, 0.0)).epsilon(1e-9));
  }
}

TEST_CASE("property: permutation invariance") {
  const MonotoneFunction f = catalog("kubo_mori");
  std::vector<double> v = {0.1, 0.2, 0.3, 0.4};
  const double ref = scalar_curvature(f, Spectrum(v));
  do {
    CHECK(scalar_curvature(f, Spectrum(v)) == Approx(ref).epsilon(1e-12));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("property: continuity across coincidence branches") {
  for (const MonotoneFunction& f : reference_catalog()) {
    const double exact = scalar_curvature(f, Spectrum({0.4, 0.4, 0.2}));
    const double nudged = scalar_curvature(f, Spectrum({0.4 + 1e-7, 0.4 - 1e-7, 0.2}));
    CHECK(std::abs(nudged - exact) <= 1e-4 * std::max(1.0, std::abs(exact)));
    const double third = 1.0 / 3.0;
    const double uniform = scalar_curvature(f, Spectrum({third, third, 1.0 - 2.0 * third}));
    const double near = scalar_curvature(f, Spectrum({third + 1e-7, third - 1e-7, 1.0 - 2.0 * third}));
    CHECK(std::abs(near - uniform) <= 1e-4 * std::max(1.0, std::abs(uniform)));
  }
}

TEST_CASE("majorization") {
  CHECK(is_more_mixed(Spectrum({0.5, 0.5}), Spectrum({1.0 - 1e-12, 1e-12})));
  CHECK(is_more_mixed(Spectrum({0.5, 0.3, 0.2}), Spectrum({0.5, 0.3, 0.2})));
  CHECK_FALSE(is_more_mixed(Spectrum({0.4, 0.4, 0.2}), Spectrum({0.5, 0.25, 0.25})));
  CHECK_FALSE(is_more_mixed(Spectrum({0.5, 0.25, 0.25}), Spectrum({0.4, 0.4, 0.2})));
  CHECK_THROWS(is_more_mixed(Spectrum({0.5, 0.5}), Spectrum({0.5, 0.3, 0.2})));
}

TEST_CASE("monotonicity scan") {
  const auto grid = qubit_majorization_grid();
  CHECK(grid.size() == 45);
  CHECK(monotonicity_scan(catalog("kubo_mori"), grid).empty());
  CHECK(monotonicity_scan(catalog("sld"), grid).empty());
  CHECK_FALSE(monotonicity_scan(family_function({0.45, 0.0}), grid).empty());
  std::vector<std::pair<Spectrum, Spectrum>> unordered = {{Spectrum({0.9, 0.1}), Spectrum({0.5, 0.5})}};
  CHECK_THROWS(monotonicity_scan(catalog("sld"), unordered));
}

TEST_CASE("three-level example has a local minimum at the uniform state") {
  const MonotoneFunction f = function_from_measure(SymmetricMeasure::from_half({{0.001, 0.25}, {0.5, 0.5}}));
  for (double x : {0.3, 2.0}) {
    CHECK(f(x) == Approx(250 * x / (999 * x + 1) + 250 * x / (x + 999) + x / (x + 1)).epsilon(1e-12));
  }
  const double third = 1.0 / 3.0;
  const double r0 = scalar_curvature(f, Spectrum({third, third, 1.0 - 2.0 * third}));
  const double d = 1e-2 / std::sqrt(2.0);
  const double plus = scalar_curvature(f, Spectrum({third + d, third - d, 1.0 - 2.0 * third}));
  const double minus = scalar_curvature(f, Spectrum({third - d, third + d, 1.0 - 2.0 * third}));
  CHECK(plus - 2.0 * r0 + minus > 0.0);
}
