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

#ifndef ACKA_CLI_H_
#define ACKA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "acka/config.h"
#include "acka/protocols.h"

namespace acka {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitAcceptance = 2 };

// Entry point of the `acka` tool. args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Human-readable report of one run.
void PrintOutcome(std::ostream& out, const RunConfig& cfg, const RunOutcome& o);

void RunSweepFinite(const ScenarioConfig& cfg, std::ostream& out);
void RunSweepAsymptotic(const ScenarioConfig& cfg, std::ostream& out);

}  // namespace acka

#endif  // ACKA_CLI_H_
