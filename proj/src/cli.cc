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

#include "acka/cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include "acka/acceptance.h"
#include "acka/parallel.h"

namespace acka {
namespace {

std::string Parties(const PartySet& s) {
  std::string out;
  for (PartyId p : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(p.value);
  }
  return out.empty() ? "-" : out;
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

double KeyBits(const RunOutcome& o) {
  switch (o.protocol) {
    case ProtocolKind::kAcka: return static_cast<double>(o.ell_net);
    case ProtocolKind::kFullyAcka: return static_cast<double>(o.ell);
    default: {
      for (const auto& v : o.views) {
        if (v.conference_key) return static_cast<double>(v.conference_key->size());
      }
      return 0.0;
    }
  }
}

// Registers a --<key> option for every config key on `cmd`.
std::map<std::string, std::vector<std::string>>* AddKeyOptions(
    CLI::App* cmd, std::vector<std::unique_ptr<std::map<std::string, std::vector<std::string>>>>& keep) {
  keep.push_back(std::make_unique<std::map<std::string, std::vector<std::string>>>());
  auto* values = keep.back().get();
  for (const auto& key : ConfigKeys()) {
    cmd->add_option("--" + key, (*values)[key], "config key " + key)
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }
  return values;
}

ScenarioConfig BuildConfig(const std::string& config_path,
                           const std::map<std::string, std::vector<std::string>>& flags) {
  ScenarioConfig cfg;
  if (!config_path.empty()) ApplySettings(cfg, LoadConfigFile(config_path));
  for (const auto& key : ConfigKeys()) {
    auto it = flags.find(key);
    if (it == flags.end()) continue;
    for (const auto& v : it->second) ApplySetting(cfg, key, v);
  }
  return cfg;
}

// Writes to the configured output file, or to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int DoRun(const ScenarioConfig& cfg, std::ostream& out) {
  const int reps = cfg.repetitions;
  std::vector<RunConfig> configs(reps, cfg.run);
  for (int i = 0; i < reps; ++i) configs[i].params.seed = cfg.run.params.seed + i;
  // Validate up front so configuration errors surface before any work.
  ValidateParams(configs[0].params);
  auto outcomes = ParallelMap<RunOutcome>(
      configs.size(), [&](std::size_t i) { return RunProtocol(configs[i]); });

  Sink sink(cfg.output, out);
  std::ostream& o = sink.get();
  o << std::setprecision(9);
  if (reps == 1) {
    PrintOutcome(o, configs[0], outcomes[0]);
  } else {
    int ok = 0;
    for (int i = 0; i < reps; ++i) {
      const auto& r = outcomes[i];
      ok += r.participants_ok;
      o << "seed=" << configs[i].params.seed << " ok=" << YesNo(r.participants_ok)
        << " abort=" << (r.abort_reason.empty() ? "-" : r.abort_reason)
        << " keys_equal=" << YesNo(r.keys_equal) << " q_x_obs=" << r.q_x_obs
        << " ell=" << r.ell << "\n";
    }
    o << "runs=" << reps << " completed=" << ok << "\n";
  }
  if (!cfg.transcript_path.empty()) {
    std::ofstream t(cfg.transcript_path);
    if (!t) throw ConfigError("cannot open transcript file " + cfg.transcript_path);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (reps > 1) t << "# seed " << configs[i].params.seed << "\n";
      for (const auto& line : outcomes[i].transcript) t << line << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

void PrintOutcome(std::ostream& out, const RunConfig& cfg, const RunOutcome& o) {
  const ProtocolParams& p = cfg.params;
  out << "protocol: " << ProtocolName(o.protocol) << "\n"
      << "n: " << p.n << "  m: " << o.receivers.size() << "  L: " << p.L
      << "  p: " << p.p << "  seed: " << p.seed << "\n"
      << "sender: " << o.sender.value << "  receivers: " << Parties(o.receivers) << "\n"
      << "collision_output: " << o.collision_output << "\n"
      << "id_abort: " << YesNo(o.id_abort) << "  id_correct: " << YesNo(o.id_correct) << "\n"
      << "verification_abort: " << YesNo(o.verification_abort) << "\n"
      << "participants_ok: " << YesNo(o.participants_ok)
      << "  participants_abort: " << YesNo(o.participants_abort) << "\n"
      << "keys_equal: " << YesNo(o.keys_equal) << "\n";
  if (!o.abort_reason.empty()) out << "abort_reason: " << o.abort_reason << "\n";
  if (UsesGhz(o.protocol)) {
    out << "test_rounds: " << o.test_rounds << "  q_x_obs: " << o.q_x_obs
        << (o.degenerate ? "  (degenerate)" : "") << "\n"
        << "threshold: " << o.threshold << "  observed_score: " << o.observed_score
        << "  resamples: " << o.resamples << "\n"
        << "raw_key_len: " << o.raw_key_len << "  ell_raw: " << o.ell_raw
        << "  ell: " << o.ell << "  ell_net: " << o.ell_net << "\n";
  }
  const auto eps = EpsilonTotal(o.protocol, ComponentsOf(p));
  out << "eps_total: " << eps.total << "\n";
  const auto uses = MeasuredNetworkUses(o.ledger, p, KeyBits(o));
  out << "ghz_network_uses: " << o.ledger.ghz_network_uses
      << "  ghz_detected: " << o.ledger.ghz_detected << "\n"
      << "private_bits: " << o.ledger.private_bits_consumed
      << "  broadcast_bits: " << o.ledger.broadcast_bits
      << "  parity_rounds: " << o.ledger.parity_rounds
      << "  key_pool_bits: " << o.ledger.key_pool_bits << "\n"
      << "bell_uses: " << uses.bell_uses << "  network_uses: " << uses.total
      << "  rate: " << uses.rate << "\n";
  out << "stage_private_bits:";
  for (const auto& [stage, bits] : o.stage_private_bits) out << " " << stage << "=" << bits;
  out << "\n";
  for (const auto& v : o.views) {
    out << "party " << v.id.value << ": role=" << RoleName(v.role)
        << " testing_key=" << v.testing_key.size() << " raw_key=" << v.raw_key.size()
        << " key=" << (v.conference_key ? std::to_string(v.conference_key->size()) : "-")
        << " v=" << v.v << " notified=" << v.notified << "\n";
  }
}

void RunSweepFinite(const ScenarioConfig& cfg, std::ostream& out) {
  struct Point {
    ProtocolKind kind;
    int n;
    double d;
    double l_tot;
  };
  std::vector<Point> points;
  for (ProtocolKind kind : cfg.protocols) {
    for (int n : cfg.n_values) {
      for (double d : cfg.d_km) {
        for (double l : cfg.l_tot) points.push_back({kind, n, d, l});
      }
    }
  }
  const ProtocolParams& base = cfg.run.params;
  auto reports = ParallelMap<RateReport>(points.size(), [&](std::size_t i) {
    const Point& pt = points[i];
    ChannelModel model{pt.n, Transmittance(pt.d, cfg.atten_db_per_km),
                       base.q_x, base.q_z, base.q_xb, base.q_zb};
    return OptimizeRate(pt.kind, pt.l_tot, model, cfg.eps_target);
  });
  std::ostringstream label;
  label << std::setprecision(9) << "Q=" << base.q_x;
  WriteFiniteCsvHeader(out);
  for (std::size_t i = 0; i < points.size(); ++i) {
    WriteFiniteCsvRow(out, reports[i], points[i].d, label.str());
  }
}

void RunSweepAsymptotic(const ScenarioConfig& cfg, std::ostream& out) {
  const ProtocolParams& q = cfg.run.params;
  if (cfg.n_min < 3 || cfg.n_max < cfg.n_min) throw ConfigError("need 3 <= n_min <= n_max");
  WriteAsymptoticCsvHeader(out);
  out << std::setprecision(9);
  auto ratio = [](double a, double b) {
    return b > 0.0 ? a / b : std::numeric_limits<double>::infinity();
  };
  for (double d : cfg.d_km) {
    const double eta = Transmittance(d, cfg.atten_db_per_km);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const auto r = ComputeAsymptoticRates(n, eta, q.q_x, q.q_z, q.q_xb, q.q_zb);
      const auto s = ComputeScalingRatios(n, eta);
      const std::pair<const char*, double> rows[] = {
          {"cka/bcka", ratio(r.r_cka, r.r_bcka)},
          {"acka/backa", ratio(r.r, r.r_b)},
          {"fully-acka/bifully-acka", ratio(r.r_f, r.r_bf)},
          {"scaling:cka", s.cka},
          {"scaling:acka", s.acka},
          {"scaling:fully-acka", s.fully},
      };
      for (const auto& [name, value] : rows) {
        out << name << "," << n << "," << d << "," << value << "\n";
      }
    }
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anonymous conference key agreement simulator and rate analyzer", "acka"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<std::map<std::string, std::vector<std::string>>>> keep;

  std::string config_path;
  auto* run = app.add_subcommand("run", "simulate protocol runs");
  auto* finite = app.add_subcommand("sweep-finite", "finite-key rate sweep (CSV)");
  auto* asym = app.add_subcommand("sweep-asymptotic", "asymptotic rate ratios (CSV)");
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  std::map<CLI::App*, std::map<std::string, std::vector<std::string>>*> flags;
  for (auto* cmd : {run, finite, asym}) {
    cmd->add_option("--config,-c", config_path, "key = value config file");
    flags[cmd] = AddKeyOptions(cmd, keep);
  }
  std::vector<int> only;
  verify->add_option("--only", only, "criterion ids")->delimiter(',');

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (verify->parsed()) {
      const std::set<int> ids(only.begin(), only.end());
      for (int id : ids) {
        if (id < 1 || id > kCriterionCount) throw ConfigError("no criterion " + std::to_string(id));
      }
      bool all = true;
      for (const auto& r : RunAcceptance(ids)) {
        out << FormatCriterion(r) << std::endl;
        all = all && r.pass;
      }
      return all ? kExitOk : kExitAcceptance;
    }
    for (auto* cmd : {run, finite, asym}) {
      if (!cmd->parsed()) continue;
      ScenarioConfig cfg = BuildConfig(config_path, *flags[cmd]);
      if (cmd == run) return DoRun(cfg, out);
      Sink sink(cfg.output, out);
      if (cmd == finite) RunSweepFinite(cfg, sink.get());
      else RunSweepAsymptotic(cfg, sink.get());
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace acka
