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

#include "acka/adversary.h"

#include <algorithm>
#include <sstream>

#include "acka/randomness.h"

namespace acka {

const char* ActionName(ActionKind kind) {
  switch (kind) {
    case ActionKind::kFlipParityInput: return "flip-parity-input";
    case ActionKind::kRefuseBroadcast: return "refuse-broadcast";
    case ActionKind::kApplyAsSecondSender: return "apply-as-second-sender";
    case ActionKind::kTamperAmdOffset: return "tamper-amd-offset";
    case ActionKind::kReportFakeXOutcome: return "report-fake-X-outcome";
  }
  return "unknown";
}

ActionKind ParseAction(const std::string& name) {
  for (ActionKind k : {ActionKind::kFlipParityInput, ActionKind::kRefuseBroadcast,
                       ActionKind::kApplyAsSecondSender, ActionKind::kTamperAmdOffset,
                       ActionKind::kReportFakeXOutcome}) {
    if (name == ActionName(k)) return k;
  }
  throw ConfigError("unknown adversary action '" + name + "'");
}

namespace {

Phase ParsePhase(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Phase::kFinalVeto); ++i) {
    auto p = static_cast<Phase>(i);
    if (name == PhaseName(p)) return p;
  }
  throw ConfigError("unknown phase '" + name + "'");
}

}  // namespace

AdversaryAction ParseActionSpec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  if (parts.size() < 2) throw ConfigError("adversary action needs kind:party");
  AdversaryAction a;
  a.kind = ParseAction(parts[0]);
  try {
    a.party = PartyId(std::stoi(parts[1]));
    for (std::size_t i = 2; i < parts.size(); ++i) {
      auto eq = parts[i].find('=');
      if (eq == std::string::npos) throw ConfigError("expected key=value in '" + parts[i] + "'");
      std::string key = parts[i].substr(0, eq), val = parts[i].substr(eq + 1);
      if (key == "phase") a.phase = ParsePhase(val);
      else if (key == "segment") a.segment = std::stoi(val);
      else if (key == "index") a.index = std::stoll(val);
      else if (key == "length") a.length = std::stoll(val);
      else if (key == "rate") a.rate = std::stod(val);
      else if (key == "value") a.value = std::stoi(val);
      else throw ConfigError("unknown adversary key '" + key + "'");
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    throw ConfigError("malformed adversary action '" + spec + "'");
  }
  if (a.kind == ActionKind::kReportFakeXOutcome && a.phase == Phase::kNone) {
    a.phase = Phase::kTestParity;
  }
  return a;
}

void ValidateScript(const AdversaryScript& script, int n) {
  for (PartyId p : script.corrupt) {
    if (p.value < 0 || p.value >= n) throw ConfigError("corrupt party out of range");
  }
  for (const auto& a : script.actions) {
    if (!script.corrupt.count(a.party)) {
      throw ConfigError(std::string(ActionName(a.kind)) + ": party " +
                        std::to_string(a.party.value) + " is not corrupt");
    }
    if (a.length < 1 || a.index < 0) throw ConfigError("action index/length out of range");
    if (!(a.rate >= 0.0 && a.rate <= 1.0)) throw ConfigError("action rate must be in [0,1]");
    if (a.kind == ActionKind::kApplyAsSecondSender && (a.value < 1 || a.value > 2)) {
      throw ConfigError("apply-as-second-sender value must be 1 or 2");
    }
    if (a.kind == ActionKind::kReportFakeXOutcome && a.phase != Phase::kTestParity) {
      throw ConfigError("report-fake-X-outcome acts on test-parity only");
    }
  }
}

ScriptedAdversary::ScriptedAdversary(AdversaryScript script, std::uint64_t seed)
    : script_(std::move(script)), rng_(MakeEngine(seed, Stream::kAdversary)) {}

const BitString& ScriptedAdversary::Offset(std::size_t action, int segment) {
  auto key = std::make_pair(action, segment);
  auto it = offsets_.find(key);
  if (it != offsets_.end()) return it->second;
  const auto len = static_cast<std::size_t>(script_.actions[action].length);
  BitString off;
  do {
    off = BitString::Random(len, rng_);
  } while (off.is_zero());
  return offsets_.emplace(key, std::move(off)).first->second;
}

void ScriptedAdversary::OnParity(Phase phase, int segment, std::int64_t index,
                                 std::vector<Bit>& inputs, PartySet& refusing) {
  for (std::size_t i = 0; i < script_.actions.size(); ++i) {
    const AdversaryAction& a = script_.actions[i];
    if (a.kind == ActionKind::kApplyAsSecondSender || a.phase != phase) continue;
    if (a.segment >= 0 && a.segment != segment) continue;
    if (a.kind == ActionKind::kReportFakeXOutcome) {
      if (std::bernoulli_distribution(a.rate)(rng_)) {
        inputs[a.party.value] ^= 1;
        ++interventions_;
      }
      continue;
    }
    if (index < a.index || index >= a.index + a.length) continue;
    ++interventions_;
    switch (a.kind) {
      case ActionKind::kFlipParityInput:
        inputs[a.party.value] ^= 1;
        break;
      case ActionKind::kRefuseBroadcast:
        refusing.insert(a.party);
        break;
      case ActionKind::kTamperAmdOffset:
        inputs[a.party.value] ^= Offset(i, segment)[index - a.index];
        break;
      default:
        break;
    }
  }
}

int ScriptedAdversary::ApplicantInput(PartyId who) const {
  int value = 0;
  for (const auto& a : script_.actions) {
    if (a.kind == ActionKind::kApplyAsSecondSender && a.party == who) {
      value = std::max(value, a.value);
    }
  }
  return value;
}

}  // namespace acka
