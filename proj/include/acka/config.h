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

#ifndef ACKA_CONFIG_H_
#define ACKA_CONFIG_H_

#include <string>
#include <utility>
#include <vector>

#include "acka/protocols.h"
#include "acka/rates.h"

namespace acka {

// Flat key = value settings. Keys use the parameter symbols (n, m, L, p,
// q_x, q_z, r_v, eps_enc, ...). Lines starting with '#' are comments;
// "include = other.cfg" splices another file, relative to the including one.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

KeyValues ParseKeyValues(const std::string& text, const std::string& origin = "<text>");
KeyValues LoadConfigFile(const std::string& path);

struct ScenarioConfig {
  RunConfig run;
  int repetitions = 1;
  std::string output;          // empty = stdout
  std::string transcript_path;

  // Sweeps.
  std::vector<ProtocolKind> protocols{ProtocolKind::kAcka, ProtocolKind::kFullyAcka,
                                      ProtocolKind::kBacka, ProtocolKind::kBifullyAcka};
  std::vector<double> l_tot{1e5, 1e6, 1e7, 1e8, 1e9, 1e10, 1e11, 1e12};
  std::vector<int> n_values{5, 8};
  std::vector<double> d_km{2.0};
  double atten_db_per_km = 0.17;
  double eps_target = 1e-8;
  int n_min = 3;
  int n_max = 20;
};

// Every accepted key, in documentation order.
const std::vector<std::string>& ConfigKeys();

// Applies one setting; throws ConfigError on unknown keys or bad values.
void ApplySetting(ScenarioConfig& cfg, const std::string& key, const std::string& value);
void ApplySettings(ScenarioConfig& cfg, const KeyValues& kv);

}  // namespace acka

#endif  // ACKA_CONFIG_H_
