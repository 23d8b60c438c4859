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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "acka/config.h"

namespace acka {
namespace {

namespace fs = std::filesystem;

fs::path TempDir() {
  auto dir = fs::temp_directory_path() /
             ("acka_config_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
              "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::create_directories(dir / "sub");
  return dir;
}

void WriteFile(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(ParseKeyValues, CommentsAndWhitespace) {
  auto kv = ParseKeyValues("# header\n  n = 6   # trailing\n\nL=1000\r\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0], (std::pair<std::string, std::string>{"n", "6"}));
  EXPECT_EQ(kv[1], (std::pair<std::string, std::string>{"L", "1000"}));
}

TEST(ParseKeyValues, Malformed) {
  EXPECT_THROW(ParseKeyValues("n 6"), ConfigError);
  EXPECT_THROW(ParseKeyValues("= 6"), ConfigError);
}

TEST(LoadConfigFile, IncludeIsRelative) {
  auto dir = TempDir();
  WriteFile(dir / "sub" / "base.cfg", "n = 7\np = 0.2\n");
  WriteFile(dir / "main.cfg", "include = sub/base.cfg\np = 0.3\n");
  auto kv = LoadConfigFile((dir / "main.cfg").string());
  ScenarioConfig cfg;
  ApplySettings(cfg, kv);
  EXPECT_EQ(cfg.run.params.n, 7);
  EXPECT_DOUBLE_EQ(cfg.run.params.p, 0.3);  // later lines win
  fs::remove_all(dir);
}

TEST(LoadConfigFile, Errors) {
  auto dir = TempDir();
  EXPECT_THROW(LoadConfigFile((dir / "missing.cfg").string()), ConfigError);
  WriteFile(dir / "loop.cfg", "include = loop.cfg\n");
  EXPECT_THROW(LoadConfigFile((dir / "loop.cfg").string()), ConfigError);
  WriteFile(dir / "bad.cfg", "include = nope.cfg\n");
  EXPECT_THROW(LoadConfigFile((dir / "bad.cfg").string()), ConfigError);
  fs::remove_all(dir);
}

TEST(ApplySetting, EveryKeyIsListedOnce) {
  const auto& keys = ConfigKeys();
  std::set<std::string> seen(keys.begin(), keys.end());
  EXPECT_EQ(seen.size(), keys.size());
  for (const char* k : {"protocol", "n", "m", "L", "p", "q_x", "r_v", "eps_enc", "seed",
                        "noise", "adversary", "repetitions", "l_tot", "eps_target"}) {
    EXPECT_TRUE(seen.count(k)) << k;
  }
}

TEST(ApplySetting, Scalars) {
  ScenarioConfig cfg;
  ApplySettings(cfg, ParseKeyValues("m = 3\nL = 1e4\nq = 0.04\nr_v = 9\nseed = 12\n"
                                    "eps_pa = 1e-7\nrepetitions = 4\nbroadcast_log = yes\n"));
  EXPECT_EQ(cfg.run.params.m, 3);
  EXPECT_EQ(cfg.run.params.L, 10000);
  EXPECT_DOUBLE_EQ(cfg.run.params.q_x, 0.04);
  EXPECT_DOUBLE_EQ(cfg.run.params.q_zb, 0.04);
  EXPECT_EQ(cfg.run.params.r_v, 9);
  EXPECT_EQ(cfg.run.params.seed, 12u);
  EXPECT_DOUBLE_EQ(cfg.run.params.eps_pa, 1e-7);
  EXPECT_EQ(cfg.repetitions, 4);
  EXPECT_TRUE(cfg.run.keep_broadcast_log);
}

TEST(ApplySetting, Lists) {
  ScenarioConfig cfg;
  ApplySettings(cfg, ParseKeyValues("protocol = fully-acka, backa\nn = 4,6\n"
                                    "l_tot = 1e5,1e7\nd_km = 5, 10\nreceivers = 1,3\n"));
  EXPECT_EQ(cfg.protocols,
            (std::vector<ProtocolKind>{ProtocolKind::kFullyAcka, ProtocolKind::kBacka}));
  EXPECT_EQ(cfg.run.protocol, ProtocolKind::kFullyAcka);
  EXPECT_EQ(cfg.n_values, (std::vector<int>{4, 6}));
  EXPECT_EQ(cfg.run.params.n, 4);
  EXPECT_EQ(cfg.l_tot, (std::vector<double>{1e5, 1e7}));
  EXPECT_DOUBLE_EQ(cfg.run.params.eta, Transmittance(5.0, cfg.atten_db_per_km));
  EXPECT_EQ(cfg.run.receivers, (PartySet{PartyId(1), PartyId(3)}));
}

TEST(ApplySetting, NoiseModels) {
  ScenarioConfig cfg;
  ApplySetting(cfg, "noise_q_x", "0.01");
  ASSERT_TRUE(cfg.run.noise);
  EXPECT_DOUBLE_EQ(std::get<DirectRates>(*cfg.run.noise).q_x, 0.01);
  ApplySetting(cfg, "q_bit", "0.002");
  EXPECT_DOUBLE_EQ(std::get<PauliPerQubit>(*cfg.run.noise).q_bit, 0.002);
  ApplySetting(cfg, "noise", "threshold");
  EXPECT_FALSE(cfg.run.noise);
}

TEST(ApplySetting, AdversaryRepeats) {
  ScenarioConfig cfg;
  ApplySettings(cfg, ParseKeyValues("corrupt = 3,4\nadversary = refuse-broadcast:3\n"
                                    "adversary = flip-parity-input:4:phase=ec-hash\n"));
  EXPECT_EQ(cfg.run.adversary.corrupt.size(), 2u);
  EXPECT_EQ(cfg.run.adversary.actions.size(), 2u);
}

TEST(ApplySetting, Rejects) {
  ScenarioConfig cfg;
  const std::pair<const char*, const char*> bad[] = {
      {"colour", "red"}, {"n", "five"},       {"m", "2.5"},         {"p", "0.1x"},
      {"seed", "-1"},    {"noise", "gauss"},  {"repetitions", "0"}, {"protocol", ""},
      {"ec_block", "0"}, {"eps_target", "2"}, {"broadcast_log", "maybe"},
      {"protocol", "qkd"}, {"l_tot", ""}};
  for (const auto& [k, v] : bad) EXPECT_THROW(ApplySetting(cfg, k, v), ConfigError) << k;
}

}  // namespace
}  // namespace acka
