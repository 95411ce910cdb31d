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

#ifndef MONOCURV_SYMMETRIC_MEASURE_HPP
#define MONOCURV_SYMMETRIC_MEASURE_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace monocurv {

struct Atom {
  double t;
  double weight;
};

/// Piecewise-constant density on [lo, hi] carrying the given mass.
struct DensityBin {
  double lo;
  double hi;
  double mass;
};

/// A point of the integration rule that discretizes a measure.
struct QuadratureNode {
  double t;
  double weight;
};

/**
 * Probability measure on [0,1] invariant under t -> 1-t.
 *
 * Storage is canonical: only the half [0, 1/2] is kept and the mirror image
 * is implied. An atom at t = 1/2 is its own mirror and carries its full
 * weight once. Bins are integrated with 16-point Gauss-Legendre; the
 * resulting node set is itself symmetric, so the discretized measure stays
 * inside the same class.
 */
class SymmetricMeasure {
 public:
  /// Builds from the lower half; every atom with t < 1/2 and every bin is
  /// mirrored. Atoms must lie in [0, 1/2] and bins in [0, 1/2].
  static SymmetricMeasure from_half(std::vector<Atom> atoms, std::vector<DensityBin> bins = {});

  /// Builds from an explicit, already symmetric description on [0,1].
  /// Rejects inputs that are not mirror-symmetric within 1e-12.
  static SymmetricMeasure from_full(std::vector<Atom> atoms, std::vector<DensityBin> bins = {});

  static SymmetricMeasure dirac_half();
  /// 1/2 delta_p + 1/2 delta_{1-p}, p in [0, 1/2].
  static SymmetricMeasure dirac_pair(double p);

  const std::vector<Atom>& half_atoms() const { return half_atoms_; }
  const std::vector<DensityBin>& half_bins() const { return half_bins_; }

  /// Every atom and bin node of the full (mirrored) measure.
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }

  double total_mass() const;

  /// Integral of g against the measure.
  template <class G>
  double integrate(const G& g) const {
    double acc = 0.0;
    for (const QuadratureNode& n : nodes_) acc += n.weight * g(n.t);
    return acc;
  }

  bool has_density() const { return !half_bins_.empty(); }

 private:
  SymmetricMeasure(std::vector<Atom> atoms, std::vector<DensityBin> bins);

  std::vector<Atom> half_atoms_;
  std::vector<DensityBin> half_bins_;
  std::vector<QuadratureNode> nodes_;
};

/// Moments of the image mu' of mu under x = 4t(1-t).
struct MomentSummary {
  double mean;      // m
  double variance;  // m2 - m^2
  double second;    // E2
  double third;     // E3
};

MomentSummary pushforward_moments(const SymmetricMeasure& mu);

/// Density of mu' at x in (0,1) for the continuous part of mu; atoms excluded.
double pushforward_density(const SymmetricMeasure& mu, double x);

/// f^(k)(1) of the function represented by mu, 1 <= k <= 6.
double derivatives_at_one(const SymmetricMeasure& mu, int k);

/// Measure file: {"atoms":[{"t","w"}], "density_bins":[{"lo","hi","mass"}], "auto_mirror":true}.
SymmetricMeasure parse_measure_json(const std::string& text);
SymmetricMeasure load_measure_file(const std::filesystem::path& path);
std::string to_measure_json(const SymmetricMeasure& mu);

}  // namespace monocurv

#endif  // MONOCURV_SYMMETRIC_MEASURE_HPP
