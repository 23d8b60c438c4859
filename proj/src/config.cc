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

#include "acka/config.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace acka {
namespace {

std::string Trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  for (std::string item; std::getline(in, item, ',');) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void Bad(const std::string& key, const std::string& value) {
  throw ConfigError("bad value '" + value + "' for key '" + key + "'");
}

double ToDouble(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double d = std::stod(value, &pos);
    if (pos != value.size()) Bad(key, value);
    return d;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    Bad(key, value);
  }
}

std::int64_t ToInt(const std::string& key, const std::string& value) {
  double d = ToDouble(key, value);
  if (d != static_cast<double>(static_cast<std::int64_t>(d))) Bad(key, value);
  return static_cast<std::int64_t>(d);
}

bool ToBool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  Bad(key, value);
}

PartySet ToParties(const std::string& key, const std::string& value) {
  PartySet out;
  for (const auto& item : SplitList(value)) {
    out.insert(PartyId(static_cast<int>(ToInt(key, item))));
  }
  return out;
}

DirectRates& Direct(ScenarioConfig& cfg) {
  if (!cfg.run.noise || !std::holds_alternative<DirectRates>(*cfg.run.noise)) {
    cfg.run.noise = DirectRates{cfg.run.params.q_x, cfg.run.params.q_z};
  }
  return std::get<DirectRates>(*cfg.run.noise);
}

PauliPerQubit& Pauli(ScenarioConfig& cfg) {
  if (!cfg.run.noise || !std::holds_alternative<PauliPerQubit>(*cfg.run.noise)) {
    cfg.run.noise = PauliPerQubit{};
  }
  return std::get<PauliPerQubit>(*cfg.run.noise);
}

using Setter = std::function<void(ScenarioConfig&, const std::string&, const std::string&)>;

const std::vector<std::pair<std::string, Setter>>& Table() {
  static const std::vector<std::pair<std::string, Setter>> table = [] {
    std::vector<std::pair<std::string, Setter>> t;
    auto add = [&t](std::string k, Setter s) { t.emplace_back(std::move(k), std::move(s)); };
    using C = ScenarioConfig;
    using S = const std::string&;
    add("protocol", [](C& c, S, S v) {
      auto names = SplitList(v);
      if (names.empty()) throw ConfigError("empty protocol list");
      c.protocols.clear();
      for (const auto& name : names) c.protocols.push_back(ParseProtocol(name));
      c.run.protocol = c.protocols.front();
    });
    add("n", [](C& c, S k, S v) {
      auto items = SplitList(v);
      if (items.empty()) Bad(k, v);
      c.n_values.clear();
      for (const auto& i : items) c.n_values.push_back(static_cast<int>(ToInt(k, i)));
      c.run.params.n = c.n_values.front();
    });
    add("m", [](C& c, S k, S v) { c.run.params.m = static_cast<int>(ToInt(k, v)); });
    add("L", [](C& c, S k, S v) { c.run.params.L = ToInt(k, v); });
    add("p", [](C& c, S k, S v) { c.run.params.p = ToDouble(k, v); });
    add("q_x", [](C& c, S k, S v) { c.run.params.q_x = ToDouble(k, v); });
    add("q_z", [](C& c, S k, S v) { c.run.params.q_z = ToDouble(k, v); });
    add("q_xb", [](C& c, S k, S v) { c.run.params.q_xb = ToDouble(k, v); });
    add("q_zb", [](C& c, S k, S v) { c.run.params.q_zb = ToDouble(k, v); });
    add("q", [](C& c, S k, S v) {
      double q = ToDouble(k, v);
      c.run.params.q_x = c.run.params.q_z = c.run.params.q_xb = c.run.params.q_zb = q;
    });
    add("eta", [](C& c, S k, S v) { c.run.params.eta = ToDouble(k, v); });
    add("atten", [](C& c, S k, S v) { c.atten_db_per_km = ToDouble(k, v); });
    add("d_km", [](C& c, S k, S v) {
      auto items = SplitList(v);
      if (items.empty()) Bad(k, v);
      c.d_km.clear();
      for (const auto& i : items) c.d_km.push_back(ToDouble(k, i));
      c.run.params.eta = Transmittance(c.d_km.front(), c.atten_db_per_km);
    });
    add("r_v", [](C& c, S k, S v) { c.run.params.r_v = static_cast<int>(ToInt(k, v)); });
    add("r_n", [](C& c, S k, S v) { c.run.params.r_n = static_cast<int>(ToInt(k, v)); });
    add("eps_enc", [](C& c, S k, S v) { c.run.params.eps_enc = ToDouble(k, v); });
    add("eps_ec", [](C& c, S k, S v) { c.run.params.eps_ec = ToDouble(k, v); });
    add("eps_pa", [](C& c, S k, S v) { c.run.params.eps_pa = ToDouble(k, v); });
    add("eps_x", [](C& c, S k, S v) { c.run.params.eps_x = ToDouble(k, v); });
    add("l_b", [](C& c, S k, S v) { c.run.params.l_b = ToInt(k, v); });
    add("seed", [](C& c, S k, S v) {
      auto x = ToInt(k, v);
      if (x < 0) Bad(k, v);
      c.run.params.seed = static_cast<std::uint64_t>(x);
    });
    add("sender", [](C& c, S k, S v) { c.run.sender = PartyId(static_cast<int>(ToInt(k, v))); });
    add("receivers", [](C& c, S k, S v) { c.run.receivers = ToParties(k, v); });
    add("noise", [](C& c, S k, S v) {
      if (v == "direct") Direct(c);
      else if (v == "pauli") Pauli(c);
      else if (v == "threshold") c.run.noise.reset();
      else Bad(k, v);
    });
    add("noise_q_x", [](C& c, S k, S v) { Direct(c).q_x = ToDouble(k, v); });
    add("noise_q_z", [](C& c, S k, S v) { Direct(c).q_z = ToDouble(k, v); });
    add("q_phase", [](C& c, S k, S v) { Pauli(c).q_phase = ToDouble(k, v); });
    add("q_bit", [](C& c, S k, S v) { Pauli(c).q_bit = ToDouble(k, v); });
    add("ec_backend", [](C& c, S, S v) { c.run.ec_backend = ParseEcBackend(v); });
    add("ec_block", [](C& c, S k, S v) {
      auto b = ToInt(k, v);
      if (b < 1) Bad(k, v);
      c.run.ec_block = static_cast<std::size_t>(b);
    });
    add("corrupt", [](C& c, S k, S v) { c.run.adversary.corrupt = ToParties(k, v); });
    add("adversary", [](C& c, S, S v) {
      c.run.adversary.actions.push_back(ParseActionSpec(v));
    });
    add("unnotified", [](C& c, S k, S v) { c.run.unnotified = ToParties(k, v); });
    add("transcript", [](C& c, S, S v) {
      c.transcript_path = v;
      c.run.transcript = !v.empty();
    });
    add("broadcast_log", [](C& c, S k, S v) { c.run.keep_broadcast_log = ToBool(k, v); });
    add("repetitions", [](C& c, S k, S v) {
      auto r = ToInt(k, v);
      if (r < 1) Bad(k, v);
      c.repetitions = static_cast<int>(r);
    });
    add("output", [](C& c, S, S v) { c.output = v; });
    add("l_tot", [](C& c, S k, S v) {
      auto items = SplitList(v);
      if (items.empty()) Bad(k, v);
      c.l_tot.clear();
      for (const auto& i : items) c.l_tot.push_back(ToDouble(k, i));
    });
    add("eps_target", [](C& c, S k, S v) {
      c.eps_target = ToDouble(k, v);
      if (!(c.eps_target > 0 && c.eps_target < 1)) Bad(k, v);
    });
    add("n_min", [](C& c, S k, S v) { c.n_min = static_cast<int>(ToInt(k, v)); });
    add("n_max", [](C& c, S k, S v) { c.n_max = static_cast<int>(ToInt(k, v)); });
    return t;
  }();
  return table;
}

void ParseInto(const std::string& text, const std::string& origin,
               const std::filesystem::path& base, int depth, KeyValues& out) {
  if (depth > 16) throw ConfigError("include nesting too deep at " + origin);
  std::stringstream in(text);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = Trim(line.substr(0, eq)), value = Trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (key == "include") {
      std::filesystem::path path = base / value;
      std::ifstream f(path);
      if (!f) throw ConfigError("cannot open included file " + path.string());
      std::stringstream buf;
      buf << f.rdbuf();
      ParseInto(buf.str(), path.string(), path.parent_path(), depth + 1, out);
      continue;
    }
    out.emplace_back(std::move(key), std::move(value));
  }
}

}  // namespace

KeyValues ParseKeyValues(const std::string& text, const std::string& origin) {
  KeyValues out;
  ParseInto(text, origin, std::filesystem::current_path(), 0, out);
  return out;
}

KeyValues LoadConfigFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  KeyValues out;
  ParseInto(buf.str(), path, std::filesystem::path(path).parent_path(), 0, out);
  return out;
}

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : Table()) k.push_back(name);
    return k;
  }();
  return keys;
}

void ApplySetting(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  for (const auto& [name, setter] : Table()) {
    if (name == key) {
      setter(cfg, key, value);
      return;
    }
  }
  throw ConfigError("unknown config key '" + key + "'");
}

void ApplySettings(ScenarioConfig& cfg, const KeyValues& kv) {
  for (const auto& [k, v] : kv) ApplySetting(cfg, k, v);
}

}  // namespace acka
