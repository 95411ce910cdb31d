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

#ifndef MONOCURV_ACCEPTANCE_HPP
#define MONOCURV_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace monocurv::acceptance {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

CriterionResult origin_values();            // 1
CriterionResult three_path_agreement();     // 2
CriterionResult series_verification();      // 3
CriterionResult moment_identities();        // 4
CriterionResult family_minimum();           // 5
CriterionResult single_pair_positivity();   // 6
CriterionResult non_monotone_exhibit();     // 7
CriterionResult spectral_reduction();       // 8
CriterionResult three_level_minimum();      // 9
CriterionResult zero_pair_ledger();         // 10

/// All criteria in order.
std::vector<CriterionResult> run_all();

/// "[PASS] 3 title: detail"
std::string format(const CriterionResult& r);

}  // namespace monocurv::acceptance

#endif  // MONOCURV_ACCEPTANCE_HPP
