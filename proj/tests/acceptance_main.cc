// Copyright 2026 The ACKA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <set>

#include "acka/acceptance.h"

// Runs all acceptance criteria, one line each. Criteria listed below fail
// for understood reasons (see README); any other failure, or one of these
// starting to pass silently, fails the binary.
int main() {
  const std::set<int> known_failures = {3, 7};
  int unexpected = 0;
  for (const auto& r : acka::RunAcceptance({})) {
    std::cout << acka::FormatCriterion(r);
    const bool known = known_failures.count(r.id) > 0;
    if (!r.pass && known) std::cout << "  [documented deviation]";
    if (r.pass == known) {
      std::cout << (r.pass ? "  [unexpected pass]" : "  [unexpected failure]");
      ++unexpected;
    }
    std::cout << std::endl;
  }
  std::cout << (unexpected ? "acceptance: FAILED" : "acceptance: ok") << std::endl;
  return unexpected ? 1 : 0;
}
