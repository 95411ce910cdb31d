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

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace monocurv {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kMirrorTolerance = 1e-12;

using GaussRule = boost::math::quadrature::gauss<double, 16>;

// Appends the nodes of a bin mapped from [-1,1]; boost stores the
// non-negative abscissae only.
void append_bin_nodes(const DensityBin& bin, std::vector<QuadratureNode>& out) {
  if (bin.mass == 0.0) return;
  const double half_width = 0.5 * (bin.hi - bin.lo);
  const double mid = 0.5 * (bin.hi + bin.lo);
  const double density = bin.mass / (bin.hi - bin.lo);
  const auto& abscissa = GaussRule::abscissa();
  const auto& weight = GaussRule::weights();
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    const double w = density * half_width * weight[i];
    if (abscissa[i] == 0.0) {
      out.push_back({mid, w});
      continue;
    }
    out.push_back({mid - half_width * abscissa[i], w});
    out.push_back({mid + half_width * abscissa[i], w});
  }
}

void validate_half(const std::vector<Atom>& atoms, const std::vector<DensityBin>& bins) {
  for (const Atom& a : atoms) {
    if (!(a.t >= 0.0 && a.t <= 0.5)) throw std::invalid_argument("atom location outside [0, 1/2]");
    if (!(a.weight > 0.0)) throw std::invalid_argument("atom weights must be positive");
  }
  for (const DensityBin& b : bins) {
    if (!(b.lo >= 0.0 && b.hi <= 0.5 && b.lo < b.hi)) throw std::invalid_argument("density bin outside [0, 1/2]");
    if (!(b.mass >= 0.0)) throw std::invalid_argument("density bin mass must be non-negative");
  }
}

}  // namespace

SymmetricMeasure::SymmetricMeasure(std::vector<Atom> atoms, std::vector<DensityBin> bins)
    : half_atoms_(std::move(atoms)), half_bins_(std::move(bins)) {
  validate_half(half_atoms_, half_bins_);
  for (const Atom& a : half_atoms_) {
    if (a.t == 0.5) {
      nodes_.push_back({0.5, a.weight});
    } else {
      nodes_.push_back({a.t, a.weight});
      nodes_.push_back({1.0 - a.t, a.weight});
    }
  }
  for (const DensityBin& b : half_bins_) {
    append_bin_nodes(b, nodes_);
    append_bin_nodes({1.0 - b.hi, 1.0 - b.lo, b.mass}, nodes_);
  }
  const double mass = total_mass();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "measure must have total mass 1 (got " << mass << ")";
    throw std::invalid_argument(msg.str());
  }
}

SymmetricMeasure SymmetricMeasure::from_half(std::vector<Atom> atoms, std::vector<DensityBin> bins) {
  return SymmetricMeasure(std::move(atoms), std::move(bins));
}

SymmetricMeasure SymmetricMeasure::from_full(std::vector<Atom> atoms, std::vector<DensityBin> bins) {
  std::vector<Atom> half_atoms;
  std::vector<Atom> upper_atoms;
  for (const Atom& a : atoms) {
    if (!(a.t >= 0.0 && a.t <= 1.0)) throw std::invalid_argument("atom location outside [0, 1]");
    if (!(a.weight > 0.0)) throw std::invalid_argument("atom weights must be positive");
    if (std::abs(a.t - 0.5) <= kMirrorTolerance) {
      half_atoms.push_back({0.5, a.weight});
    } else if (a.t < 0.5) {
      half_atoms.push_back(a);
    } else {
      upper_atoms.push_back(a);
    }
  }
  std::vector<bool> matched(upper_atoms.size(), false);
  for (const Atom& a : half_atoms) {
    if (a.t == 0.5) continue;
    bool found = false;
    for (std::size_t i = 0; i < upper_atoms.size() && !found; ++i) {
      if (!matched[i] && std::abs(upper_atoms[i].t - (1.0 - a.t)) <= kMirrorTolerance &&
          std::abs(upper_atoms[i].weight - a.weight) <= kMirrorTolerance) {
        matched[i] = true;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("measure is not symmetric under t -> 1-t (atoms)");
  }
  for (bool m : matched) {
    if (!m) throw std::invalid_argument("measure is not symmetric under t -> 1-t (atoms)");
  }

  std::vector<DensityBin> half_bins;
  std::vector<DensityBin> straddling;
  std::vector<DensityBin> upper_bins;
  for (const DensityBin& b : bins) {
    if (!(b.lo >= 0.0 && b.hi <= 1.0 && b.lo < b.hi)) throw std::invalid_argument("density bin outside [0, 1]");
    if (!(b.mass >= 0.0)) throw std::invalid_argument("density bin mass must be non-negative");
    if (b.hi <= 0.5) {
      half_bins.push_back(b);
    } else if (b.lo >= 0.5) {
      upper_bins.push_back(b);
    } else {
      if (std::abs(b.lo - (1.0 - b.hi)) > kMirrorTolerance) {
        throw std::invalid_argument("measure is not symmetric under t -> 1-t (bin across 1/2)");
      }
      straddling.push_back({b.lo, 0.5, 0.5 * b.mass});
    }
  }
  std::vector<bool> bin_matched(upper_bins.size(), false);
  for (const DensityBin& b : half_bins) {
    bool found = false;
    for (std::size_t i = 0; i < upper_bins.size() && !found; ++i) {
      if (!bin_matched[i] && std::abs(upper_bins[i].lo - (1.0 - b.hi)) <= kMirrorTolerance &&
          std::abs(upper_bins[i].hi - (1.0 - b.lo)) <= kMirrorTolerance &&
          std::abs(upper_bins[i].mass - b.mass) <= kMirrorTolerance) {
        bin_matched[i] = true;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("measure is not symmetric under t -> 1-t (bins)");
  }
  for (bool m : bin_matched) {
    if (!m) throw std::invalid_argument("measure is not symmetric under t -> 1-t (bins)");
  }
  half_bins.insert(half_bins.end(), straddling.begin(), straddling.end());
  return SymmetricMeasure(std::move(half_atoms), std::move(half_bins));
}

SymmetricMeasure SymmetricMeasure::dirac_half() { return from_half({{0.5, 1.0}}); }

SymmetricMeasure SymmetricMeasure::dirac_pair(double p) {
  if (p == 0.5) return dirac_half();
  return from_half({{p, 0.5}});
}

double SymmetricMeasure::total_mass() const {
  double acc = 0.0;
  for (const QuadratureNode& n : nodes_) acc += n.weight;
  return acc;
}

MomentSummary pushforward_moments(const SymmetricMeasure& mu) {
  const double m = mu.integrate([](double t) { return 4.0 * t * (1.0 - t); });
  const double e2 = mu.integrate([](double t) {
    const double x = 4.0 * t * (1.0 - t);
    return x * x;
  });
  const double e3 = mu.integrate([](double t) {
    const double x = 4.0 * t * (1.0 - t);
    return x * x * x;
  });
  return {m, e2 - m * m, e2, e3};
}

double pushforward_density(const SymmetricMeasure& mu, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("pushforward_density: x must lie in (0,1)");
  const double root = std::sqrt(1.0 - x);
  const double t = 0.5 * (1.0 - root);
  double rho = 0.0;
  for (const DensityBin& b : mu.half_bins()) {
    if (t >= b.lo && t < b.hi) rho += b.mass / (b.hi - b.lo);
  }
  return rho / (2.0 * root);
}

double derivatives_at_one(const SymmetricMeasure& mu, int k) {
  if (k == 0) throw std::invalid_argument("derivatives_at_one: k = 0 is the value; use eval_jet");
  if (k < 1 || k > 6) throw std::invalid_argument("derivatives_at_one: order must be in 1..6");
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * mu.integrate([k](double t) { return t * std::pow(1.0 - t, k - 1); });
}

SymmetricMeasure parse_measure_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<Atom> atoms;
  std::vector<DensityBin> bins;
  if (doc.contains("atoms")) {
    for (const auto& a : doc.at("atoms")) atoms.push_back({a.at("t").get<double>(), a.at("w").get<double>()});
  }
  if (doc.contains("density_bins")) {
    for (const auto& b : doc.at("density_bins")) {
      bins.push_back({b.at("lo").get<double>(), b.at("hi").get<double>(), b.at("mass").get<double>()});
    }
  }
  const bool auto_mirror = doc.value("auto_mirror", true);
  return auto_mirror ? SymmetricMeasure::from_half(std::move(atoms), std::move(bins))
                     : SymmetricMeasure::from_full(std::move(atoms), std::move(bins));
}

SymmetricMeasure load_measure_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_measure_json(buffer.str());
}

std::string to_measure_json(const SymmetricMeasure& mu) {
  nlohmann::json doc;
  doc["auto_mirror"] = true;
  doc["atoms"] = nlohmann::json::array();
  for (const Atom& a : mu.half_atoms()) doc["atoms"].push_back({{"t", a.t}, {"w", a.weight}});
  doc["density_bins"] = nlohmann::json::array();
  for (const DensityBin& b : mu.half_bins()) {
    doc["density_bins"].push_back({{"lo", b.lo}, {"hi", b.hi}, {"mass", b.mass}});
  }
  return doc.dump(2);
}

}  // namespace monocurv
