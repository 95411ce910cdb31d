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

#ifndef MONOCURV_NLEVEL_CURVATURE_HPP
#define MONOCURV_NLEVEL_CURVATURE_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "monocurv/monotone_function.hpp"

namespace monocurv {

/// Eigenvalues of an n-level density matrix; positive and summing to 1.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> eigenvalues);

  /// Parses "l1,l2,...". Inputs off by more than 1e-9 from unit trace are
  /// rejected; smaller offsets are rescaled away.
  static Spectrum parse(std::string_view text);

  std::span<const double> eigenvalues() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// The four terms h_1..h_4 of the curvature kernel at one argument triple.
struct HTerms {
  double h1;
  double h2;
  double h3;
  double h4;

  /// h1 - h2/2 + 2 h3 - h4.
  double combined() const { return h1 - 0.5 * h2 + 2.0 * h3 - h4; }
};

/// Pairwise distinct arguments.
HTerms h_terms_distinct(const MonotoneFunction& f, double x, double y, double z);
/// Limits at (x, x, y) and at (x, y, x); the value at (y, x, x) equals the
/// one at (x, y, x).
HTerms h_terms_xxy(const MonotoneFunction& f, double x, double y);
HTerms h_terms_xyx(const MonotoneFunction& f, double x, double y);

/// h(x, x, x) = (3/8 + 3 f''(1)) / x.
double h_triple(const MonotoneFunction& f, double x);

/// The curvature kernel h(x,y,z). Arguments within 1e-6 relative of each
/// other are treated as equal and routed to the limit formulas.
double h_value(const MonotoneFunction& f, double x, double y, double z);

/// (n^2-1)(n^2-2)/4.
double spectral_constant(std::size_t n);

/// Scalar curvature of the n-level state space at a state with this spectrum:
/// sum over all (x,y,z) of h minus the diagonal sum, plus (n^2-1)(n^2-2)/4.
double scalar_curvature(const MonotoneFunction& f, const Spectrum& s);

/// Majorization: true when a is more mixed than b.
bool is_more_mixed(const Spectrum& a, const Spectrum& b);

struct MonotonicityViolation {
  std::size_t index;
  double r_more_mixed;
  double r_less_mixed;
};

/// Pairs (D1, D2) with D1 more mixed than D2 and r(D1) < r(D2) - tol.
std::vector<MonotonicityViolation> monotonicity_scan(const MonotoneFunction& f,
                                                     std::span<const std::pair<Spectrum, Spectrum>> grid,
                                                     double tol = 1e-8);

/// Consecutive pairs of the qubit grid a = 0, 0.1, ..., 0.9.
std::vector<std::pair<Spectrum, Spectrum>> qubit_majorization_grid();

}  // namespace monocurv

#endif  // MONOCURV_NLEVEL_CURVATURE_HPP
