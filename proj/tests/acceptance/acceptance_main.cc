/*
 * Copyright 2026 The pmuspill-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
//
//   acceptance                 all criteria
//   acceptance --only 3        a single criterion
//   acceptance --regen-oracle  rewrite the committed noise oracle

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "noise_oracle.h"
#include "pmuspill/attack.h"
#include "pmuspill/errors.h"
#include "pmuspill/ingest.h"
#include "pmuspill/profile.h"
#include "rollback_oracle.h"
#include "test_util.h"

namespace pmuspill::acceptance {
namespace {

using Clock = std::chrono::steady_clock;
using attack::LeakOutcome;
using attack::Scenario;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int Jobs() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

const std::shared_ptr<const pmu::Platform>& Sample() {
  return testing::SamplePlatform().platform;
}

pmu::EventIndex EventNamed(const std::string& name) {
  auto e = Sample()->catalog().Find(name);
  if (!e) throw UnknownEvent(name);
  return *e;
}

std::vector<uint8_t> RandomBytes(std::size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> out(n);
  for (auto& b : out) b = static_cast<uint8_t>(rng());
  return out;
}

Environment MakeEnv(const mitigation::MitigationPolicy& policy,
                    std::span<const uint8_t> secret, EnvConfig config = {}) {
  Environment env(Sample(), config);
  env.ApplyPolicy(policy);
  env.PlantSecret(secret);
  return env;
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Accumulates sub-checks; the first failing one names the verdict.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failed_.empty()) failed_ = what;
    ok_ = ok_ && ok;
  }
  Verdict Done(std::string detail) const {
    if (!ok_) detail = "failed: " + failed_ + "; " + detail;
    return {ok_, std::move(detail)};
  }

 private:
  bool ok_ = true;
  std::string failed_;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

// One-sided 95% Wilson lower bound on a binomial proportion.
double WilsonLower(uint64_t successes, uint64_t n) {
  if (n == 0) return 0;
  constexpr double z = 1.6448536269514722;
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  const double nn = static_cast<double>(n);
  const double centre = p + z * z / (2 * nn);
  const double spread = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn));
  return (centre - spread) / (1 + z * z / nn);
}

// --- 1 ---------------------------------------------------------------------

Verdict EndToEndLeak() {
  const auto secret = RandomBytes(10000, 20260101);
  const auto env = MakeEnv({}, secret);
  const auto t0 = Clock::now();
  const auto out = attack::LeakSecret(env, {}, EventNamed("BR_MISP_EXEC.ALL_BRANCHES"),
                                      10, secret.size(), Jobs());
  const double secs = Seconds(t0);
  std::size_t correct = 0;
  bool executions = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    correct += out[i].value == secret[i];
    executions = executions && out[i].core_executions == 15360;
  }
  Checks c;
  c.Expect(correct == secret.size(), "recovery");
  c.Expect(executions, "executions per byte");
  c.Expect(secs < 300, "runtime");
  return c.Done(Fmt("recovered %zu/%zu, 15360 executions/byte: %s, %.1fs",
                    correct, secret.size(), executions ? "yes" : "no", secs));
}

// --- 2 ---------------------------------------------------------------------

struct SmokeSelection {
  std::vector<pmu::EventIndex> events;
  std::vector<isa::ClassIndex> classes;
};

// Ten events: five structural and three instruction-tagged speculative ones,
// two counted at retirement. Fifty instructions: triggers of the chosen
// tagged events, then evenly spaced fill.
SmokeSelection PickSmoke() {
  const auto& p = *Sample();
  const auto& cat = p.catalog();
  SmokeSelection s;
  int structural = 0;
  int tagged = 0;
  std::set<isa::ClassIndex> classes;
  for (auto e : cat.SpeculativeEvents()) {
    if (!cat.at(e).is_tagged()) {
      if (structural < 5) {
        ++structural;
        s.events.push_back(e);
      }
    } else if (tagged < 3 && !p.TriggerClasses(e).empty()) {
      ++tagged;
      s.events.push_back(e);
      const auto t = p.TriggerClasses(e);
      for (std::size_t i = 0; i < std::min<std::size_t>(4, t.size()); ++i) {
        classes.insert(t[i]);
      }
    }
  }
  int retire = 0;
  for (pmu::EventIndex e = 0; e < cat.size() && retire < 2; ++e) {
    if (cat.at(e).persistence == pmu::Persistence::kRetirementCounted) {
      ++retire;
      s.events.push_back(e);
    }
  }
  const auto all = p.iset().Ingested();
  for (std::size_t i = 0; classes.size() < 50; i = (i + 61) % all.size()) {
    classes.insert(all[i]);
  }
  s.classes.assign(classes.begin(), classes.end());
  return s;
}

std::set<std::string> SpeculativeNames(std::span<const pmu::EventIndex> events) {
  std::set<std::string> out;
  for (auto e : events) {
    if (Sample()->catalog().at(e).persistence ==
        pmu::Persistence::kSpeculativeCounted) {
      out.insert(Sample()->catalog().at(e).name);
    }
  }
  return out;
}

Verdict SweepSmoke() {
  const auto s = PickSmoke();
  attack::SweepConfig config;
  config.events = s.events;
  config.instructions = s.classes;
  config.jobs = Jobs();
  const auto t0 = Clock::now();
  const auto report = attack::Sweep(Sample(), config);
  const double secs = Seconds(t0);

  // Oracle: one leak per cell, single event, fresh environment.
  const uint8_t secret[] = {config.secret};
  const auto env = MakeEnv({}, secret);
  const auto& iset = Sample()->iset();
  std::size_t i = 0;
  std::size_t mismatches = 0;
  for (auto e : s.events) {
    for (Scenario sc : {Scenario::kS1, Scenario::kS2}) {
      for (auto cls : s.classes) {
        attack::GadgetSpec spec;
        spec.secret_addr = env.SecretAddress(0);
        (sc == Scenario::kS1 ? spec.ins1 : spec.ins2) = iset.at(cls).id;
        const auto o = attack::LeakByte(env, attack::BuildGadget(spec, iset), e,
                                        config.reps, 0);
        const auto& cell = report.cells.at(i++);
        mismatches += cell.event != e || cell.scenario != sc || cell.cls != cls ||
                      cell.trigger != (o.value == config.secret);
      }
    }
  }
  const auto flagged = report.VulnerableEvents();
  Checks c;
  c.Expect(s.events.size() == 10 && s.classes.size() == 50, "selection size");
  c.Expect(i == report.cells.size(), "cell count");
  c.Expect(mismatches == 0, "cells vs oracle");
  c.Expect(std::set<std::string>(flagged.begin(), flagged.end()) ==
               SpeculativeNames(s.events),
           "flagged set");
  c.Expect(secs < 30, "smoke runtime");
  return c.Done(Fmt("smoke %zux%zu: %zu cell mismatches, %zu flagged, %.1fs",
                    s.events.size(), s.classes.size(), mismatches,
                    flagged.size(), secs));
}

Verdict SweepFull() {
  const auto& p = *Sample();
  const auto& cat = p.catalog();
  attack::SweepConfig config;
  config.jobs = Jobs();
  std::size_t last_pct = 101;
  const auto t0 = Clock::now();
  config.progress = [&](std::size_t done, std::size_t total) {
    const std::size_t pct = done * 100 / total;
    if (pct != last_pct && pct % 10 == 0) {
      last_pct = pct;
      std::fprintf(stderr, "  full sweep %zu%% %.0fs\n", pct, Seconds(t0));
    }
  };
  const auto report = attack::Sweep(Sample(), config);
  const double secs = Seconds(t0);

  std::vector<pmu::EventIndex> all(cat.size());
  for (pmu::EventIndex e = 0; e < cat.size(); ++e) all[e] = e;
  const auto truth = SpeculativeNames(all);
  const auto flagged = report.VulnerableEvents();
  const std::set<std::string> flagged_set(flagged.begin(), flagged.end());

  std::size_t count_mismatches = 0;
  const std::size_t n = p.iset().Ingested().size();
  for (const auto& row : report.summary) {
    const auto e = *cat.Find(row.event_name);
    std::size_t expected = 0;
    if (cat.at(e).persistence == pmu::Persistence::kSpeculativeCounted) {
      expected = cat.at(e).is_tagged() ? p.TriggerClasses(e).size() : n;
    }
    count_mismatches += row.trigger_count != expected;
  }
  uint64_t nontaken[2] = {0, 0};
  for (const auto& row : report.summary) {
    if (row.event_name == "BR_INST_EXEC.NONTAKEN_CONDITIONAL") {
      nontaken[row.scenario == Scenario::kS1 ? 0 : 1] = row.trigger_count;
    }
  }
  const double executions = static_cast<double>(report.gadget_executions);
  Checks c;
  c.Expect(cat.size() == 217 && n == 3069, "inputs");
  c.Expect(flagged_set == truth && truth.size() == 20, "precision/recall");
  c.Expect(std::abs(executions / 1.33e7 - 1) <= 0.01, "gadget executions");
  c.Expect(nontaken[0] == n && nontaken[1] == n, "NONTAKEN_CONDITIONAL triggers");
  c.Expect(count_mismatches == 0, "per-event trigger counts");
  c.Expect(secs < 3600, "runtime");
  return c.Done(Fmt("full: %zu/%zu flagged, %zu true, %.4g gadget executions, "
                    "NONTAKEN_CONDITIONAL %llu/%llu, %.0fs",
                    flagged_set.size(), cat.size(), truth.size(), executions,
                    static_cast<unsigned long long>(nontaken[0]),
                    static_cast<unsigned long long>(nontaken[1]), secs));
}

// --- 3 ---------------------------------------------------------------------

Verdict Mitigations() {
  const auto secret = RandomBytes(1000, 20260103);
  const auto event = EventNamed("BR_MISP_EXEC.ALL_BRANCHES");
  struct Row {
    const char* name;
    mitigation::MitigationPolicy policy;
  };
  const Row rows[] = {
      {"RETIRE_ONLY", {.pmu_policy = pmu::Policy::kRetireOnly}},
      {"RENAMED", {.pmu_policy = pmu::Policy::kRenamed}},
      {"DISABLED", {.pmu_policy = pmu::Policy::kDisabled}},
      {"tee_gate", {.pmu_policy = pmu::Policy::kVulnerable, .tee_gate = true}},
  };
  Checks c;
  std::string detail;
  for (const auto& row : rows) {
    const auto env = MakeEnv(row.policy, secret);
    const auto out = attack::LeakSecret(env, {}, event, 10, secret.size(), Jobs());
    uint64_t correct = 0;
    uint64_t failures = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      correct += out[i].value == secret[i];
      failures += !out[i].ok();
    }
    const bool all_fail = failures == out.size();
    const double lower = WilsonLower(correct, out.size());
    c.Expect(all_fail || lower <= 2.0 / 256, row.name);
    detail += Fmt("%s %llu/%zu correct (%llu fail); ", row.name,
                  static_cast<unsigned long long>(correct), out.size(),
                  static_cast<unsigned long long>(failures));
  }

  // Fault-free profiling under renaming reads what the vulnerable PMU reads.
  const auto& cat = Sample()->catalog();
  std::vector<pmu::EventIndex> events(cat.size());
  for (pmu::EventIndex e = 0; e < cat.size(); ++e) events[e] = e;
  const auto vuln = MakeEnv({}, secret);
  const auto renamed = MakeEnv({.pmu_policy = pmu::Policy::kRenamed}, secret);
  int identical = 0;
  constexpr int kPrograms = 16;
  for (int i = 0; i < kPrograms; ++i) {
    const auto program = isa::Assemble(
        profile::BenchmarkSource(Sample()->iset(), 9000 + i, 400), Sample()->iset());
    identical += profile::ProfileCounts(vuln, program, events) ==
                 profile::ProfileCounts(renamed, program, events);
  }
  c.Expect(identical == kPrograms, "RENAMED profiling");
  return c.Done(detail + Fmt("RENAMED profiling identical on %d/%d programs",
                             identical, kPrograms));
}

// --- 4 ---------------------------------------------------------------------

Verdict Throughput() {
  const auto secret = RandomBytes(64, 20260104);
  const auto env = MakeEnv({}, secret);
  const auto event = EventNamed("BR_MISP_EXEC.ALL_BRANCHES");
  double t1 = 0;
  double worst = 0;
  std::string series;
  for (int r = 1; r <= 10; ++r) {
    const auto out = attack::LeakSecret(env, {}, event, r, secret.size(), Jobs());
    const auto m = attack::MeasureMetrics(out, secret, 3.4e9);
    if (r == 1) t1 = m.throughput;
    const double scaled = m.throughput * r / t1;
    worst = std::max(worst, std::abs(scaled - 1));
    series += Fmt("%s%.0f", r == 1 ? "" : " ", m.throughput);
  }
  Checks c;
  c.Expect(worst <= 0.10, "scaling");
  return c.Done(Fmt("T(1..10) Bps: %s; max |T(r)r/T(1)-1| = %.4f",
                    series.c_str(), worst));
}

// --- 5 ---------------------------------------------------------------------

struct OracleParams {
  uint64_t seed = 20260505;
  int trials = 2000000;
  int sim_trials = 1000;
  double p = 0.02;
  int rounds = 10;
  int domain = 256;
};

nlohmann::ordered_json OracleJson(const OracleParams& q) {
  const auto o = testing::RunNoiseOracle(q.p, q.rounds, q.domain, q.trials,
                                         q.sim_trials, q.seed);
  nlohmann::ordered_json j;
  j["model"] = "one spurious +1 per round with probability p, landing in a "
               "uniform window; a round is conclusive unless it lands outside "
               "the secret's window; a byte needs one conclusive round";
  j["seed"] = q.seed;
  j["trials"] = q.trials;
  j["sim_trials"] = q.sim_trials;
  j["p"] = q.p;
  j["rounds"] = q.rounds;
  j["domain"] = q.domain;
  j["round_conclusive"] = o.round_conclusive;
  j["byte_accuracy"] = o.byte_accuracy;
  j["bound"] = o.bound;
  return j;
}

int RegenOracle() {
  std::ofstream out(PMUSPILL_ORACLE_FILE);
  out << OracleJson({}).dump(2) << "\n";
  std::cout << "wrote " << PMUSPILL_ORACLE_FILE << "\n";
  return out ? 0 : 1;
}

Verdict Suppression() {
  Checks c;
  const auto event = EventNamed("BR_MISP_EXEC.ALL_BRANCHES");
  std::vector<uint8_t> every(256);
  for (int b = 0; b < 256; ++b) every[b] = static_cast<uint8_t>(b);
  EnvConfig tsx;
  EnvConfig handler;
  handler.suppression = sim::SuppressionMode::kSoftwareHandler;
  const auto a = attack::LeakSecret(MakeEnv({}, every, tsx), {}, event, 10, 256,
                                    Jobs(), {}, true);
  const auto b = attack::LeakSecret(MakeEnv({}, every, handler), {}, event, 10,
                                    256, Jobs(), {}, true);
  int same = 0;
  int constant_offset = 0;
  for (int i = 0; i < 256; ++i) {
    same += a[i].value == b[i].value && a[i].round_decodes == b[i].round_decodes &&
            a[i].value == static_cast<uint32_t>(i);
    bool offset = a[i].traces.size() == 10 && b[i].traces.size() == 10;
    for (std::size_t r = 0; offset && r < a[i].traces.size(); ++r) {
      const auto& x = a[i].traces[r].deltas;
      const auto& y = b[i].traces[r].deltas;
      for (std::size_t j = 0; j < x.size(); ++j) {
        offset = offset && y[j] - x[j] == y[0] - x[0];
      }
    }
    constant_offset += offset;
  }
  c.Expect(same == 256, "noise-free decodes");
  c.Expect(constant_offset == 256, "constant offset");

  // Committed oracle: recompute it and hold the simulator to its bound.
  std::ifstream in(PMUSPILL_ORACLE_FILE);
  nlohmann::json stored;
  try {
    stored = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    c.Expect(false, "oracle file");
    return c.Done(e.what());
  }
  OracleParams q;
  q.seed = stored["seed"];
  q.trials = stored["trials"];
  q.sim_trials = stored["sim_trials"];
  q.p = stored["p"];
  q.rounds = stored["rounds"];
  q.domain = stored["domain"];
  const auto fresh = OracleJson(q);
  c.Expect(std::abs(fresh["bound"].get<double>() - stored["bound"].get<double>()) < 1e-12 &&
               std::abs(fresh["round_conclusive"].get<double>() -
                        stored["round_conclusive"].get<double>()) < 1e-12,
           "oracle reproduces");
  const double bound = stored["bound"];
  const double round_rate = stored["round_conclusive"];

  const auto secret = RandomBytes(static_cast<std::size_t>(q.sim_trials), 20260105);
  std::string detail = Fmt("256/256 noise-free identical: %s; bound %.4f",
                           same == 256 ? "yes" : "no", bound);
  for (auto mode : {sim::SuppressionMode::kTsxLike,
                    sim::SuppressionMode::kSoftwareHandler}) {
    EnvConfig config;
    config.suppression = mode;
    config.noise = {.p = q.p, .seed = 5150};
    const auto out = attack::LeakSecret(MakeEnv({}, secret, config), {}, event,
                                        q.rounds, secret.size(), Jobs());
    uint64_t correct = 0;
    uint64_t conclusive = 0;
    uint64_t rounds = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      correct += out[i].value == secret[i];
      for (const auto& d : out[i].round_decodes) conclusive += d.has_value();
      rounds += out[i].round_decodes.size();
    }
    const double accuracy = static_cast<double>(correct) / out.size();
    const double rate = static_cast<double>(conclusive) / rounds;
    const double sigma = std::sqrt(round_rate * (1 - round_rate) / rounds);
    const std::string name(sim::SuppressionName(mode));
    c.Expect(accuracy >= bound, name + " accuracy");
    c.Expect(std::abs(rate - round_rate) <= 4 * sigma + 1e-12,
             name + " conclusive-round rate");
    detail += Fmt("; %s accuracy %.4f, conclusive rounds %.4f (oracle %.4f)",
                  name.c_str(), accuracy, rate, round_rate);
  }
  return c.Done(detail);
}

// --- 6 ---------------------------------------------------------------------

Verdict Rollback() {
  const auto tiny = sim::testing::CheckRollback(testing::TinyPlatform(), 1000, 20260106);
  const auto sample = sim::testing::CheckRollback(Sample(), 1000, 20260107);
  Checks c;
  c.Expect(tiny.violations() == 0, "tiny platform: " + tiny.first_failure);
  c.Expect(sample.violations() == 0, "sample platform: " + sample.first_failure);
  c.Expect(tiny.programs + sample.programs >= 1000, "program count");
  const auto with = [](const sim::testing::RollbackTally& t) {
    return Fmt("%d programs (%d faulting, %d mispredicting), %d arch / %d store / "
               "%d monotonicity violations",
               t.programs, t.with_fault, t.with_mispredict, t.arch_violations,
               t.store_leaks, t.monotonicity_violations);
  };
  return c.Done("tiny: " + with(tiny) + "; sample: " + with(sample));
}

// --- 7 ---------------------------------------------------------------------

Verdict Training() {
  const auto secret = RandomBytes(1000, 20260107);
  EnvConfig config;
  config.sim.predictor_initial = 3;
  const auto env = MakeEnv({}, secret, config);
  const auto event = EventNamed("BR_MISP_EXEC.ALL_BRANCHES");
  auto bad = [&](int training) {
    uint64_t n = 0;
    const auto out = attack::LeakSecret(env, {.training_rounds = training}, event,
                                        1, secret.size(), Jobs());
    for (std::size_t i = 0; i < out.size(); ++i) n += out[i].value != secret[i];
    return n;
  };
  const uint64_t untrained = bad(0);
  const uint64_t trained = bad(5);
  const double n = static_cast<double>(secret.size());
  const double p0 = untrained / n;
  const double p5 = trained / n;
  const double pool = (untrained + trained) / (2 * n);
  const double se = std::sqrt(pool * (1 - pool) * 2 / n);
  const double z = se > 0 ? (p0 - p5) / se : 0;
  Checks c;
  c.Expect(z > 1.6448536269514722, "one-sided z test");
  return c.Done(Fmt("bad rounds untrained %.3f vs trained %.3f, z = %.2f",
                    p0, p5, z));
}

// --- 8 ---------------------------------------------------------------------

Verdict Ingestion() {
  const auto a = ingest::LoadPlatform(testing::SamplePaths(), 42, 0.15);
  const auto b = ingest::LoadPlatform(testing::SamplePaths(), 42, 0.15);
  bool same = a.platform->catalog().size() == b.platform->catalog().size() &&
              a.platform->iset().size() == b.platform->iset().size();
  for (pmu::EventIndex e = 0; same && e < a.platform->catalog().size(); ++e) {
    same = a.platform->catalog().at(e) == b.platform->catalog().at(e);
  }
  for (isa::ClassIndex k = 0; same && k < a.platform->iset().size(); ++k) {
    same = a.platform->iset().at(k) == b.platform->iset().at(k);
  }
  Checks c;
  c.Expect(a.base_events == 214 && a.augment_events == 3 &&
               a.platform->catalog().size() == 217,
           "event counts");
  c.Expect(a.raw_instructions == 14546 && a.filtered_instructions == 3069 &&
               a.platform->iset().Ingested().size() == 3069,
           "instruction counts");
  c.Expect(same, "double-load identity");
  return c.Done(Fmt("%zu+%zu=%zu events, %zu -> %zu instructions, reload identical: %s",
                    a.base_events, a.augment_events, a.platform->catalog().size(),
                    a.raw_instructions, a.filtered_instructions,
                    same ? "yes" : "no"));
}

struct Criterion {
  int number;
  const char* title;
  std::function<Verdict()> run;
};

int Main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool regen = false;
  bool smoke_only = false;
  app.add_option("--only", only, "Run one criterion")->check(CLI::Range(1, 8));
  app.add_flag("--regen-oracle", regen, "Rewrite the noise oracle file");
  app.add_flag("--smoke", smoke_only, "Skip the full-size sweep");
  CLI11_PARSE(app, argc, argv);
  if (regen) return RegenOracle();

  const std::vector<Criterion> criteria = {
      {1, "end-to-end leak", EndToEndLeak},
      {2, "sweep oracle equivalence (smoke)", SweepSmoke},
      {2, "sweep oracle equivalence (full)", SweepFull},
      {3, "mitigation efficacy", Mitigations},
      {4, "throughput scaling", Throughput},
      {5, "suppression invariance", Suppression},
      {6, "rollback invariants", Rollback},
      {7, "training necessity", Training},
      {8, "ingestion counts", Ingestion},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    if (only != 0 && cr.number != only) continue;
    if (smoke_only && std::string(cr.title).ends_with("(full)")) continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = cr.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("[%s] criterion %d: %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL",
                cr.number, cr.title, v.detail.c_str(), Seconds(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pmuspill::acceptance

int main(int argc, char** argv) { return pmuspill::acceptance::Main(argc, argv); }
