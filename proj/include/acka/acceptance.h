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

#ifndef ACKA_ACCEPTANCE_H_
#define ACKA_ACCEPTANCE_H_

#include <set>
#include <string>
#include <vector>

namespace acka {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

constexpr int kCriterionCount = 11;

// Runs the acceptance checks (all of them when `only` is empty), in id order.
std::vector<CriterionResult> RunAcceptance(const std::set<int>& only = {});

// "[PASS] 3 name: detail (1.2 s)"
std::string FormatCriterion(const CriterionResult& r);

}  // namespace acka

#endif  // ACKA_ACCEPTANCE_H_
