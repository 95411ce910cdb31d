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

// monocurv command-line front end.
//
//   monocurv catalog
//   monocurv curve --f smallest --grid -0.95:0.95:39 [--out file.csv]
//   monocurv classify --f catalog:sld | --f measure:mu.json
//   monocurv family-scan --p 0.45 --q 0:0.03:7
//   monocurv nlevel --f kubo_mori --spectrum 0.5,0.3,0.2
//   monocurv verify
//
// Exit status: 0 success, 1 input error, 2 verification failure.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocurv/acceptance.hpp"
#include "monocurv/extremum_analysis.hpp"
#include "monocurv/monotone_function.hpp"
#include "monocurv/nlevel_curvature.hpp"
#include "monocurv/qubit_curvature.hpp"
#include "monocurv/symmetric_measure.hpp"

namespace {

using namespace monocurv;

constexpr int kInputError = 1;
constexpr int kVerificationFailure = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double min;
  double max;
  int count;

  double at(int i) const { return i == count - 1 ? max : min + (max - min) * i / (count - 1); }
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError(fmt::format("{}: cannot parse '{}'", what, text));
  }
  if (used != text.size() || !std::isfinite(v)) throw InputError(fmt::format("{}: cannot parse '{}'", what, text));
  return v;
}

GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw InputError("grid must look like min:max:count");
  GridSpec g{parse_number(text.substr(0, first), "grid min"),
             parse_number(text.substr(first + 1, second - first - 1), "grid max"), 0};
  const double count = parse_number(text.substr(second + 1), "grid count");
  if (count != std::floor(count) || count < 2 || count > 1e7) throw InputError("grid count must be an integer >= 2");
  g.count = static_cast<int>(count);
  if (!(g.min < g.max)) throw InputError("grid min must be below grid max");
  return g;
}

struct FunctionSpec {
  MonotoneFunction function;
  std::optional<SymmetricMeasure> measure;
};

FunctionSpec parse_function(const std::string& text) {
  std::string body = text;
  if (body.rfind("measure:", 0) == 0) {
    SymmetricMeasure mu = [&] {
      try {
        return load_measure_file(body.substr(8));
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
    }();
    return {function_from_measure(mu), mu};
  }
  if (body.rfind("catalog:", 0) == 0) body = body.substr(8);
  std::optional<double> parameter;
  if (const auto colon = body.find(':'); colon != std::string::npos) {
    parameter = parse_number(body.substr(colon + 1), "function parameter");
    body = body.substr(0, colon);
  }
  try {
    return {catalog(body, parameter), std::nullopt};
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_catalog(Output& out) {
  for (const std::string& name : catalog_names()) out.stream() << name << "\n";
  return 0;
}

int run_curve(const FunctionSpec& spec, const GridSpec& grid, double tol, Output& out) {
  if (grid.min <= -1.0 || grid.max >= 1.0) throw InputError("curve grid must lie inside (-1, 1)");
  std::ostream& os = out.stream();
  os << "a,r_closed,r_sums,r_geometric,max_rel_disagreement\n";
  bool ok = true;
  for (int i = 0; i < grid.count; ++i) {
    const CurvatureSample s = curvature_sample(spec.function, grid.at(i));
    os << num(s.a) << ',' << num(s.r_closed) << ',' << num(s.r_sums) << ',' << num(s.r_geometric) << ','
       << num(s.max_rel_disagreement) << "\n";
    if (!(s.max_rel_disagreement < tol)) ok = false;
  }
  if (!ok) std::cerr << "curve: disagreement above tolerance " << num(tol) << "\n";
  return ok ? 0 : kVerificationFailure;
}

nlohmann::ordered_json moments_json(const MomentSummary& m) {
  return {{"mean", m.mean}, {"variance", m.variance}, {"second", m.second}, {"third", m.third}};
}

int run_classify(const FunctionSpec& spec, Output& out) {
  const Classification c = spec.measure ? classify_origin(*spec.measure) : classify_origin(spec.function);
  nlohmann::ordered_json report;
  report["function"] = spec.function.description();
  report["c0"] = c.values.c0;
  report["c2"] = c.values.c2;
  report["c4"] = c.values.c4;
  report["verdict"] = to_string(c.verdict);
  report["decided_by"] = to_string(c.decided_by);
  report["moment_summary"] = c.moments ? moments_json(*c.moments) : nlohmann::ordered_json(nullptr);
  out.stream() << report.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) << "\n";
  return 0;
}

int run_family_scan(const std::vector<double>& ps, const std::vector<double>& qs, Output& out) {
  std::ostream& os = out.stream();
  os << "p,q,t_value,c2,verdict\n";
  for (double p : ps) {
    for (double q : qs) {
      const FamilyParams params{p, q};
      try {
        validate(params);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      const Classification c = classify_origin(family_measure(params));
      os << num(p) << ',' << num(q) << ',' << num(t_double_pair(params)) << ',' << num(c.values.c2) << ','
         << to_string(c.verdict) << "\n";
    }
  }
  return 0;
}

int run_nlevel(const FunctionSpec& spec, const std::string& spectrum_text, Output& out) {
  const Spectrum s = [&] {
    try {
      return Spectrum::parse(spectrum_text);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  out.stream() << "n,scalar_curvature\n" << s.size() << ',' << num(scalar_curvature(spec.function, s)) << "\n";
  return 0;
}

int run_verify(Output& out) {
  bool ok = true;
  for (const auto& r : acceptance::run_all()) {
    out.stream() << acceptance::format(r) << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : kVerificationFailure;
}

// "q" accepts either a single value or a grid.
std::vector<double> values_or_grid(const std::string& text, const std::string& what) {
  if (text.find(':') == std::string::npos) return {parse_number(text, what)};
  const GridSpec g = parse_grid(text);
  std::vector<double> out;
  for (int i = 0; i < g.count; ++i) out.push_back(g.at(i));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalar curvature of monotone metrics on quantum state spaces"};
  app.require_subcommand(1);

  std::string function_text;
  std::string grid_text = "-0.95:0.95:39";
  std::string out_path;
  double tol = 1e-6;
  std::string spectrum_text;
  std::string p_text;
  std::string q_text = "0";

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog function names");
  auto* curve_cmd = app.add_subcommand("curve", "Qubit curvature sweep through three independent routes");
  auto* classify_cmd = app.add_subcommand("classify", "Extremum type at the maximally mixed state");
  auto* family_cmd = app.add_subcommand("family-scan", "Sweep the two-pair measure family");
  auto* nlevel_cmd = app.add_subcommand("nlevel", "Scalar curvature of an n-level spectrum");
  auto* verify_cmd = app.add_subcommand("verify", "Run every acceptance check");

  for (auto* cmd : {curve_cmd, classify_cmd, nlevel_cmd}) {
    cmd->add_option("--f", function_text, "catalog:<name>[:param], <name>, or measure:<path>")->required();
  }
  curve_cmd->add_option("--grid", grid_text, "min:max:count, endpoints included");
  curve_cmd->add_option("--tol", tol, "relative disagreement tolerance")->check(CLI::PositiveNumber);
  family_cmd->add_option("--p", p_text, "p value or min:max:count")->required();
  family_cmd->add_option("--q", q_text, "q value or min:max:count");
  nlevel_cmd->add_option("--spectrum", spectrum_text, "comma-separated eigenvalues summing to 1")->required();
  for (auto* cmd : {catalog_cmd, curve_cmd, classify_cmd, family_cmd, nlevel_cmd, verify_cmd}) {
    cmd->add_option("--out", out_path, "write to this file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    Output out(out_path);
    if (*catalog_cmd) return run_catalog(out);
    if (*curve_cmd) return run_curve(parse_function(function_text), parse_grid(grid_text), tol, out);
    if (*classify_cmd) return run_classify(parse_function(function_text), out);
    if (*family_cmd) return run_family_scan(values_or_grid(p_text, "p"), values_or_grid(q_text, "q"), out);
    if (*nlevel_cmd) return run_nlevel(parse_function(function_text), spectrum_text, out);
    if (*verify_cmd) return run_verify(out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kInputError;
}
