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

// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <exception>
#include <iostream>

#include "monocurv/acceptance.hpp"

int main() {
  using monocurv::acceptance::CriterionResult;
  int failed = 0;
  std::vector<CriterionResult> results;
  try {
    results = monocurv::acceptance::run_all();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance run aborted: " << e.what() << "\n";
    return 1;
  }
  for (const CriterionResult& r : results) {
    std::cout << monocurv::acceptance::format(r) << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
