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

#include "monocurv/symmetric_measure.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace monocurv;
using doctest::Approx;

namespace {

SymmetricMeasure random_atomic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> loc(0.0, 0.5);
  std::uniform_real_distribution<double> w(0.1, 1.0);
  std::vector<Atom> atoms(1 + rng() % 4);
  double total = 0.0;
  for (Atom& a : atoms) {
    a = {loc(rng), w(rng)};
    total += 2.0 * a.weight;
  }
  for (Atom& a : atoms) a.weight /= total;
  return SymmetricMeasure::from_half(atoms);
}

}  // namespace

TEST_CASE("construction mirrors the lower half") {
  const SymmetricMeasure mu = SymmetricMeasure::from_half({{0.2, 0.25}, {0.5, 0.5}});
  CHECK(mu.total_mass() == Approx(1.0));
  CHECK(mu.integrate([](double t) { return t; }) == Approx(0.5));
  CHECK_THROWS(SymmetricMeasure::from_half({{0.7, 0.5}}));
  CHECK_THROWS(SymmetricMeasure::from_half({{0.2, 0.3}}));
  CHECK_THROWS(SymmetricMeasure::from_full({{0.2, 0.5}, {0.7, 0.5}}));
  CHECK(SymmetricMeasure::from_full({{0.2, 0.5}, {0.8, 0.5}}).total_mass() == Approx(1.0));
}

TEST_CASE("pushforward moments of the standard examples") {
  const MomentSummary half = pushforward_moments(SymmetricMeasure::dirac_half());
  CHECK(half.mean == Approx(1.0));
  CHECK(half.variance == Approx(0.0));
  CHECK(half.second == Approx(1.0));
  CHECK(half.third == Approx(1.0));
  const MomentSummary ends = pushforward_moments(SymmetricMeasure::dirac_pair(0.0));
  CHECK(ends.mean == Approx(0.0));
  CHECK(ends.variance == Approx(0.0));
  const MomentSummary mixed = pushforward_moments(SymmetricMeasure::from_half({{0.4, 0.25}, {0.0, 0.25}}));
  CHECK(mixed.mean == Approx(0.48));
  CHECK(mixed.second == Approx(0.4608));
}

TEST_CASE("derivatives at one of the standard examples") {
  CHECK(derivatives_at_one(SymmetricMeasure::dirac_half(), 2) == Approx(-0.5));
  CHECK(derivatives_at_one(SymmetricMeasure::dirac_pair(0.0), 2) == Approx(0.0));
  CHECK_THROWS(derivatives_at_one(SymmetricMeasure::dirac_half(), 7));
}

TEST_CASE("property: moment identities hold for random atomic measures") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const SymmetricMeasure mu = random_atomic(rng);
    const MomentSummary s = pushforward_moments(mu);
    CHECK(derivatives_at_one(mu, 1) == Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(derivatives_at_one(mu, 2) + 0.5 * s.mean) < 1e-10);
    CHECK(std::abs(derivatives_at_one(mu, 4) - (-3.0 * s.mean + 1.5 * s.second)) < 1e-10);
    CHECK(std::abs(derivatives_at_one(mu, 6) - (-90.0 * s.mean - 11.25 * s.third + 90.0 * s.second)) < 1e-10);
    CHECK(s.variance >= -1e-15);
  }
}

TEST_CASE("property: moment identities hold with density bins") {
  const SymmetricMeasure mu = SymmetricMeasure::from_half({{0.1, 0.1}}, {{0.0, 0.25, 0.25}, {0.3, 0.5, 0.15}});
  const MomentSummary s = pushforward_moments(mu);
  CHECK(mu.total_mass() == Approx(1.0));
  CHECK(std::abs(derivatives_at_one(mu, 2) + 0.5 * s.mean) < 1e-7);
  CHECK(std::abs(derivatives_at_one(mu, 4) - (-3.0 * s.mean + 1.5 * s.second)) < 1e-7);
  CHECK(std::abs(derivatives_at_one(mu, 6) - (-90.0 * s.mean - 11.25 * s.third + 90.0 * s.second)) < 1e-7);
}

TEST_CASE("Lebesgue measure: pushforward density against moments") {
  // Uniform t on [0,1] maps to x = 4t(1-t) with density 1/(2 sqrt(1-x)).
  const SymmetricMeasure mu = SymmetricMeasure::from_half({}, {{0.0, 0.5, 0.5}});
  const MomentSummary s = pushforward_moments(mu);
  CHECK(s.mean == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(s.second == Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(s.third == Approx(16.0 / 35.0).epsilon(1e-12));
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK(pushforward_density(mu, x) == Approx(0.5 / std::sqrt(1.0 - x)).epsilon(1e-12));
  }
}

TEST_CASE("non-constant density: density route integrates to the moment route") {
  // Two bins of different height; integrate x^k against the pushforward density.
  const SymmetricMeasure mu = SymmetricMeasure::from_half({}, {{0.0, 0.2, 0.1}, {0.2, 0.5, 0.4}});
  const MomentSummary s = pushforward_moments(mu);
  auto moment = [&](int k) {
    // substitution x = 1 - u^2 removes the endpoint singularity
    const int n = 20000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = (i + 0.5) / n;
      const double x = 1.0 - u * u;
      acc += std::pow(x, k) * pushforward_density(mu, x) * 2.0 * u / n;
    }
    return acc;
  };
  CHECK(moment(0) == Approx(1.0).epsilon(1e-6));
  CHECK(moment(1) == Approx(s.mean).epsilon(1e-6));
  CHECK(moment(2) == Approx(s.second).epsilon(1e-6));
}

TEST_CASE("measure JSON round trip") {
  const SymmetricMeasure mu = SymmetricMeasure::from_half({{0.1, 0.2}, {0.5, 0.2}}, {{0.2, 0.4, 0.2}});
  const SymmetricMeasure back = parse_measure_json(to_measure_json(mu));
  CHECK(back.total_mass() == Approx(1.0));
  CHECK(pushforward_moments(back).third == Approx(pushforward_moments(mu).third));
  CHECK(parse_measure_json(R"({"atoms":[{"t":0.2,"w":0.5},{"t":0.8,"w":0.5}],"auto_mirror":false})").total_mass() ==
        Approx(1.0));
  CHECK_THROWS(parse_measure_json("{\"atoms\": [{\"t\": 0.2}]}"));
  CHECK_THROWS(load_measure_file("/nonexistent/measure.json"));
}
