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

// pmuspill: leak demos, event sweeps and mitigation comparisons on the
// simulated core.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_config.h"
#include "json.hpp"
#include "pmuspill/attack.h"
#include "pmuspill/errors.h"
#include "pmuspill/ingest.h"
#include "pmuspill/profile.h"
#include "pmuspill/rng.h"

namespace pmuspill::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Progress goes to stderr, at most once per percent.
class Progress {
 public:
  Progress(std::string label, std::size_t total, bool quiet)
      : label_(std::move(label)), total_(total), quiet_(quiet) {}
  void Update(std::size_t done) {
    if (quiet_ || total_ == 0) return;
    const std::size_t pct = done * 100 / total_;
    if (pct == last_ && done != total_) return;
    last_ = pct;
    const double secs =
        std::chrono::duration<double>(Clock::now() - start_).count();
    std::fprintf(stderr, "\r%s %zu/%zu (%zu%%) %.1fs", label_.c_str(), done,
                 total_, pct, secs);
    if (done == total_) std::fputc('\n', stderr);
  }

 private:
  std::string label_;
  std::size_t total_;
  bool quiet_;
  std::size_t last_ = SIZE_MAX;
  Clock::time_point start_ = Clock::now();
};

void Note(const RunConfig& c, const std::string& msg) {
  if (!c.quiet) std::cerr << msg << "\n";
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

ingest::PlatformLoad Load(const RunConfig& c) {
  const auto t0 = Clock::now();
  auto load = ingest::LoadPlatform(PathsOf(c), Seed(c), c.attach_probability);
  Note(c, "loaded " + std::to_string(load.base_events) + "+" +
              std::to_string(load.augment_events) + " events, " +
              std::to_string(load.raw_instructions) + " -> " +
              std::to_string(load.filtered_instructions) + " instructions in " +
              std::to_string(std::chrono::duration<double>(Clock::now() - t0)
                                 .count()) +
              "s");
  return load;
}

pmu::EventIndex FindEvent(const pmu::Platform& platform,
                          const std::string& name) {
  auto e = platform.catalog().Find(name);
  if (!e) throw UnknownEvent("event " + name + " is not in the catalog");
  return *e;
}

std::vector<uint8_t> ParseHex(const std::string& text) {
  std::string digits;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw ConfigError("secret hex contains '" + std::string(1, ch) + "'");
    }
    digits.push_back(ch);
  }
  if (digits.empty() || digits.size() % 2 != 0) {
    throw ConfigError("secret hex needs a positive even number of digits");
  }
  std::vector<uint8_t> out;
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    out.push_back(static_cast<uint8_t>(std::stoi(digits.substr(i, 2), nullptr, 16)));
  }
  return out;
}

std::vector<uint8_t> RandomSecret(uint64_t seed, std::size_t n) {
  Rng rng(DeriveSeed(seed, Fnv1a64("secret")));
  std::vector<uint8_t> out(n);
  for (auto& b : out) b = static_cast<uint8_t>(rng.Below(256));
  return out;
}

std::vector<uint8_t> SecretOf(const RunConfig& c) {
  if (!c.secret_hex.empty()) return ParseHex(c.secret_hex);
  if (!c.secret_file.empty()) {
    std::ifstream in(c.secret_file, std::ios::binary);
    std::vector<uint8_t> out{std::istreambuf_iterator<char>(in),
                             std::istreambuf_iterator<char>()};
    if (out.empty()) throw ConfigError("secret file is empty");
    return out;
  }
  return RandomSecret(Seed(c), static_cast<std::size_t>(c.random_bytes));
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", v * 100.0);
  return buf;
}

std::string Fixed(double v, int digits = 1) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

struct LeakRun {
  std::vector<attack::LeakOutcome> outcomes;
  attack::Metrics metrics;
  mitigation::LaunchStatus launch = mitigation::LaunchStatus::kLaunchOk;
};

LeakRun RunLeak(const RunConfig& c,
                const std::shared_ptr<const pmu::Platform>& platform,
                const mitigation::MitigationPolicy& policy,
                std::span<const uint8_t> secret, int rounds,
                const std::string& label) {
  Environment env(platform, EnvOf(c));
  env.ApplyPolicy(policy);
  LeakRun run;
  run.launch = env.PlantSecret(secret);
  attack::GadgetSpec spec;
  spec.training_rounds = c.training;
  spec.secret_addr = env.SecretAddress(0);
  Progress progress(label, secret.size(), c.quiet);
  run.outcomes = attack::LeakSecret(
      env, spec, FindEvent(*platform, c.event), rounds, secret.size(), c.jobs,
      [&](std::size_t done) { progress.Update(done); }, !c.trace_out.empty());
  run.metrics = attack::MeasureMetrics(run.outcomes, secret, c.clock_hz);
  return run;
}

std::map<std::string, uint64_t> FailureCounts(
    std::span<const attack::LeakOutcome> outcomes) {
  std::map<std::string, uint64_t> out;
  for (const auto& o : outcomes) {
    if (o.failure != attack::FailureReason::kNone) {
      ++out[std::string(attack::FailureName(o.failure))];
    }
  }
  return out;
}

int DemoLeak(const RunConfig& c) {
  auto load = Load(c);
  const auto secret = SecretOf(c);
  const auto policy = PolicyOf(c);
  LeakRun run = RunLeak(c, load.platform, policy, secret, c.rounds, "leak");
  const auto& m = run.metrics;

  std::ostringstream out;
  out << "event: " << c.event << "\n"
      << "policy: " << pmu::PolicyName(policy.pmu_policy)
      << (policy.tee_gate ? " +tee_gate" : "") << "\n"
      << "launch: " << mitigation::LaunchStatusName(run.launch) << "\n"
      << "suppression: " << c.suppression << "\n"
      << "rounds: " << c.rounds << "\n"
      << "secret_bytes: " << secret.size() << "\n"
      << "recovered:";
  for (std::size_t i = 0; i < run.outcomes.size(); ++i) {
    if (i % 32 == 0) out << "\n ";
    const auto& v = run.outcomes[i].value;
    char buf[4];
    std::snprintf(buf, sizeof(buf), "%02x", v ? *v : 0);
    out << ' ' << (v ? std::string(buf) : std::string("??"));
  }
  out << "\n"
      << "correct: " << (m.bytes - m.failures - m.wrong) << "/" << m.bytes
      << "\n"
      << "wrong: " << m.wrong << "\n"
      << "decode_failures: " << m.failures << "\n";
  for (const auto& [name, n] : FailureCounts(run.outcomes)) {
    out << "  " << name << ": " << n << "\n";
  }
  out << "error_rate: " << Percent(m.error_rate) << "\n"
      << "executions_per_byte: " << Fixed(m.executions_per_byte, 0) << "\n"
      << "cycles_per_byte: " << Fixed(m.cycles_per_byte, 1) << "\n"
      << "modeled_throughput_Bps: " << Fixed(m.throughput, 1) << " at "
      << Fixed(c.clock_hz / 1e9, 2) << " GHz\n";

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (c.rounds_sweep) {
    out << "\nrounds  executions/byte  cycles/byte  throughput_Bps  T(r)*r/T(1)"
           "  error_rate\n";
    double t1 = 0;
    for (int r = 1; r <= c.rounds; ++r) {
      LeakRun rr = RunLeak(c, load.platform, policy, secret, r,
                           "rounds=" + std::to_string(r));
      const auto& mr = rr.metrics;
      if (r == 1) t1 = mr.throughput;
      const double scaled = t1 > 0 ? mr.throughput * r / t1 : 0;
      char line[160];
      std::snprintf(line, sizeof(line), "%6d  %15.0f  %11.1f  %14.1f  %11.4f  %10s\n",
                    r, mr.executions_per_byte, mr.cycles_per_byte,
                    mr.throughput, scaled, Percent(mr.error_rate).c_str());
      out << line;
      nlohmann::ordered_json row;
      row["rounds"] = r;
      row["executions_per_byte"] = mr.executions_per_byte;
      row["cycles_per_byte"] = mr.cycles_per_byte;
      row["throughput_Bps"] = mr.throughput;
      row["scaled"] = scaled;
      row["error_rate"] = mr.error_rate;
      rows.push_back(std::move(row));
    }
  }
  std::cout << out.str();

  if (!c.csv_out.empty()) {
    std::ostringstream csv;
    csv << "index,truth,recovered,failure\n";
    for (std::size_t i = 0; i < run.outcomes.size(); ++i) {
      const auto& o = run.outcomes[i];
      csv << i << ',' << int{secret[i]} << ','
          << (o.value ? std::to_string(*o.value) : std::string()) << ','
          << attack::FailureName(o.failure) << '\n';
    }
    WriteFile(c.csv_out, csv.str());
  }
  if (!c.trace_out.empty()) {
    std::string lines;
    for (const auto& o : run.outcomes) {
      for (const auto& t : o.traces) lines += attack::DumpTrace(t) + "\n";
    }
    WriteFile(c.trace_out, lines);
  }
  if (!c.json_out.empty()) {
    nlohmann::ordered_json j;
    j["event"] = c.event;
    j["policy"] = pmu::PolicyName(policy.pmu_policy);
    j["tee_gate"] = policy.tee_gate;
    j["launch"] = mitigation::LaunchStatusName(run.launch);
    j["suppression"] = c.suppression;
    j["rounds"] = c.rounds;
    j["bytes"] = m.bytes;
    j["wrong"] = m.wrong;
    j["failures"] = m.failures;
    j["error_rate"] = m.error_rate;
    j["executions_per_byte"] = m.executions_per_byte;
    j["cycles_per_byte"] = m.cycles_per_byte;
    j["throughput_Bps"] = m.throughput;
    j["clock_hz"] = c.clock_hz;
    if (c.rounds_sweep) j["rounds_sweep"] = rows;
    WriteFile(c.json_out, j.dump(2) + "\n");
  }
  return 0;
}

// One line per event flagged in
// any scenario, with per-scenario trigger counts and error rates.
std::string SummaryTable(std::span<const attack::EventSummary> rows) {
  struct Line {
    std::string category;
    std::optional<attack::EventSummary> s1, s2;
  };
  std::vector<std::string> order;
  std::map<std::string, Line> lines;
  std::size_t events = 0;
  for (const auto& r : rows) {
    auto [it, inserted] = lines.try_emplace(r.event_name);
    if (inserted) {
      order.push_back(r.event_name);
      ++events;
    }
    it->second.category = r.category;
    (r.scenario == attack::Scenario::kS1 ? it->second.s1 : it->second.s2) = r;
  }
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-4s %-40s %-24s %7s %7s %9s %9s\n", "#",
                "event", "category", "S1", "S2", "err_S1", "err_S2");
  out << buf;
  int n = 0;
  auto count = [](const std::optional<attack::EventSummary>& s) {
    return s ? std::to_string(s->trigger_count) : std::string("-");
  };
  auto err = [](const std::optional<attack::EventSummary>& s) {
    return s && s->trigger_count > 0 ? Percent(s->error_rate) : std::string("-");
  };
  for (const auto& name : order) {
    const auto& l = lines[name];
    const bool flagged = (l.s1 && l.s1->vulnerable) || (l.s2 && l.s2->vulnerable);
    if (!flagged) continue;
    std::snprintf(buf, sizeof(buf), "%-4d %-40s %-24s %7s %7s %9s %9s\n", ++n,
                  name.c_str(), l.category.c_str(), count(l.s1).c_str(),
                  count(l.s2).c_str(), err(l.s1).c_str(), err(l.s2).c_str());
    out << buf;
  }
  out << "vulnerable_events: " << n << "/" << events << "\n";
  return out.str();
}

std::vector<attack::Scenario> ScenariosOf(const RunConfig& c) {
  if (c.scenario == "s1") return {attack::Scenario::kS1};
  if (c.scenario == "s2") return {attack::Scenario::kS2};
  return {attack::Scenario::kS1, attack::Scenario::kS2};
}

std::vector<isa::ClassIndex> EvenlySpaced(std::vector<isa::ClassIndex> all,
                                          int limit) {
  if (limit <= 0 || static_cast<std::size_t>(limit) >= all.size()) return all;
  std::vector<isa::ClassIndex> out;
  for (int i = 0; i < limit; ++i) {
    out.push_back(all[static_cast<std::size_t>(i) * all.size() / limit]);
  }
  return out;
}

attack::SweepConfig SweepConfigOf(const RunConfig& c,
                                  const pmu::Platform& platform) {
  attack::SweepConfig sc;
  sc.scenarios = ScenariosOf(c);
  sc.reps = c.reps;
  sc.jobs = c.jobs;
  sc.events_per_run = c.events_per_run;
  sc.policy = PolicyOf(c);
  sc.env = EnvOf(c);
  for (const auto& name : c.events) sc.events.push_back(FindEvent(platform, name));
  if (sc.events.empty() && c.event_limit > 0) {
    const auto n = std::min<std::size_t>(c.event_limit, platform.catalog().size());
    for (pmu::EventIndex e = 0; e < n; ++e) sc.events.push_back(e);
  }
  sc.instructions = EvenlySpaced(platform.iset().Ingested(), c.instruction_limit);
  return sc;
}

int SweepCmd(const RunConfig& c) {
  auto load = Load(c);
  attack::SweepConfig sc = SweepConfigOf(c, *load.platform);
  std::optional<Progress> bar;
  sc.progress = [&](std::size_t done, std::size_t total) {
    if (!bar) bar.emplace("sweep", total, c.quiet);
    bar->Update(done);
  };
  const auto report = attack::Sweep(load.platform, sc);
  std::cout << SummaryTable(report.summary)
            << "tested_instructions: "
            << (report.summary.empty() ? 0 : report.summary.front().tested)
            << "\n"
            << "gadget_executions: " << report.gadget_executions << "\n"
            << "simulator_runs: " << report.simulator_runs << "\n";
  if (!c.csv_out.empty()) WriteFile(c.csv_out, report.ToCsv());
  if (!c.json_out.empty()) WriteFile(c.json_out, report.ToJson(*load.platform));
  return 0;
}

int ReportCmd(const RunConfig& c, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open report " + path);
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  const auto rows = attack::ReadSummaryCsv(text);
  std::cout << SummaryTable(rows);
  if (!c.csv_out.empty()) {
    attack::SweepReport copy;
    copy.summary = rows;
    WriteFile(c.csv_out, copy.ToCsv());
  }
  return 0;
}

// Instruction classes that trigger at least one instruction-tagged event, one
// per event, so a small sweep still sees every tagged event.
std::vector<isa::ClassIndex> TaggedCover(const pmu::Platform& platform) {
  std::vector<isa::ClassIndex> out;
  for (pmu::EventIndex e = 0; e < platform.catalog().size(); ++e) {
    if (!platform.catalog().at(e).is_tagged()) continue;
    auto classes = platform.TriggerClasses(e);
    if (!classes.empty()) out.push_back(classes.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MitigationEval(const RunConfig& c) {
  auto load = Load(c);
  const auto& platform = load.platform;
  const auto& catalog = platform->catalog();
  const auto secret = SecretOf(c);

  struct Row {
    std::string name;
    mitigation::MitigationPolicy policy;
    bool sweep_check = false;
  };
  std::vector<Row> rows;
  for (auto p : {pmu::Policy::kVulnerable, pmu::Policy::kRetireOnly,
                 pmu::Policy::kRenamed, pmu::Policy::kDisabled}) {
    Row r;
    r.name = std::string(pmu::PolicyName(p));
    r.policy.pmu_policy = p;
    r.sweep_check = p == pmu::Policy::kVulnerable;
    rows.push_back(r);
  }
  for (auto p : {pmu::Policy::kVulnerable, pmu::Policy::kDisabled}) {
    Row r;
    r.name = std::string(pmu::PolicyName(p)) + "+tee_gate";
    r.policy.pmu_policy = p;
    r.policy.tee_gate = true;
    rows.push_back(r);
  }
  {
    Row r;
    r.name = "VULNERABLE+disable_speculative";
    for (auto e : catalog.SpeculativeEvents()) {
      r.policy.per_event_disable.insert(catalog.at(e).name);
    }
    r.sweep_check = true;
    rows.push_back(r);
  }
  if (!c.disable_events.empty()) {
    Row r;
    r.name = "VULNERABLE+disable_listed";
    r.policy = PolicyOf(c);
    r.policy.pmu_policy = pmu::Policy::kVulnerable;
    r.policy.tee_gate = false;
    r.sweep_check = true;
    rows.push_back(r);
  }

  // Profiling workloads: fixed programs, all events the row may program.
  std::vector<isa::Program> programs;
  for (int i = 0; i < c.profile_programs; ++i) {
    programs.push_back(isa::Assemble(
        profile::BenchmarkSource(platform->iset(),
                                 DeriveSeed(Seed(c), 0xbe9c + i), 400),
        platform->iset()));
  }
  auto profile_counts = [&](const mitigation::MitigationPolicy& policy,
                            const std::vector<pmu::EventIndex>& events) {
    Environment env(platform, EnvOf(c));
    env.ApplyPolicy(policy);
    std::vector<std::vector<std::optional<uint64_t>>> out;
    for (const auto& p : programs) out.push_back(profile::ProfileCounts(env, p, events));
    return out;
  };

  std::ostringstream table;
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  std::string csv =
      "policy,tee_gate,launch,bytes,correct,accuracy,failure_mode,"
      "profiling_identical,sweep_vulnerable\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-32s %-10s %9s %10s %-20s %-9s %s\n",
                "policy", "launch", "correct", "accuracy", "failure_mode",
                "profiling", "sweep_vulnerable");
  table << buf;
  for (const auto& row : rows) {
    LeakRun run = RunLeak(c, platform, row.policy, secret, c.rounds, row.name);
    const auto& m = run.metrics;
    const uint64_t correct = m.bytes - m.failures - m.wrong;
    const double accuracy =
        m.bytes ? static_cast<double>(correct) / static_cast<double>(m.bytes) : 0;
    const auto failures = FailureCounts(run.outcomes);
    std::string mode = "none";
    uint64_t best = 0;
    for (const auto& [name, n] : failures) {
      if (n > best) {
        best = n;
        mode = name;
      }
    }
    std::vector<pmu::EventIndex> events;
    for (pmu::EventIndex e = 0; e < catalog.size(); ++e) {
      if (!row.policy.per_event_disable.contains(catalog.at(e).name)) {
        events.push_back(e);
      }
    }
    mitigation::MitigationPolicy reference;
    const bool identical =
        profile_counts(row.policy, events) == profile_counts(reference, events);

    std::string sweep = "-";
    if (row.sweep_check && !c.skip_sweep_check) {
      attack::SweepConfig sc;
      sc.reps = c.reps;
      sc.jobs = c.jobs;
      sc.policy = row.policy;
      sc.env = EnvOf(c);
      sc.instructions = TaggedCover(*platform);
      std::optional<Progress> bar;
      sc.progress = [&](std::size_t done, std::size_t total) {
        if (!bar) bar.emplace("sweep " + row.name, total, c.quiet);
        bar->Update(done);
      };
      sweep = std::to_string(attack::Sweep(platform, sc).VulnerableEvents().size());
    }

    std::snprintf(buf, sizeof(buf), "%-32s %-10s %4llu/%-4llu %10s %-20s %-9s %s\n",
                  row.name.c_str(),
                  std::string(mitigation::LaunchStatusName(run.launch)).c_str(),
                  static_cast<unsigned long long>(correct),
                  static_cast<unsigned long long>(m.bytes),
                  Percent(accuracy).c_str(), mode.c_str(),
                  identical ? "identical" : "differs", sweep.c_str());
    table << buf;
    csv += row.name + ',' + (row.policy.tee_gate ? "true" : "false") + ',' +
           std::string(mitigation::LaunchStatusName(run.launch)) + ',' +
           std::to_string(m.bytes) + ',' + std::to_string(correct) + ',' +
           Fixed(accuracy, 6) + ',' + mode + ',' +
           (identical ? "true" : "false") + ',' + sweep + '\n';
    nlohmann::ordered_json j;
    j["policy"] = row.name;
    j["tee_gate"] = row.policy.tee_gate;
    j["launch"] = mitigation::LaunchStatusName(run.launch);
    j["bytes"] = m.bytes;
    j["correct"] = correct;
    j["accuracy"] = accuracy;
    j["failures"] = failures;
    j["profiling_identical"] = identical;
    j["sweep_vulnerable"] = sweep;
    json.push_back(std::move(j));
  }
  std::cout << "event: " << c.event << "\n"
            << "secret_bytes: " << secret.size() << "\n"
            << "rounds: " << c.rounds << "\n"
            << "profiling_programs: " << programs.size() << "\n"
            << table.str();
  if (!c.csv_out.empty()) WriteFile(c.csv_out, csv);
  if (!c.json_out.empty()) WriteFile(c.json_out, json.dump(2) + "\n");
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Simulated PMU side-channel leak, sweep and mitigation tool",
               "pmuspill"};
  app.require_subcommand(1);
  RunConfig config;
  AddRunOptions(app, config);

  auto* demo = app.add_subcommand("demo-leak", "Plant a secret and leak it");
  auto* sweep = app.add_subcommand("sweep", "Find events that leak");
  auto* eval = app.add_subcommand("mitigation-eval",
                                  "Compare the attack under every policy");
  auto* report = app.add_subcommand("report", "Pretty-print a saved sweep CSV");
  std::string report_path;
  report->add_option("csv", report_path, "Sweep summary CSV")->required();
  for (auto* sub : {demo, sweep, eval, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (report->parsed()) return ReportCmd(config, report_path);
    Finalize(config);
    if (demo->parsed()) return DemoLeak(config);
    if (sweep->parsed()) return SweepCmd(config);
    if (eval->parsed()) return MitigationEval(config);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const IllegalSquash& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExhausted& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace
}  // namespace pmuspill::cli

int main(int argc, char** argv) { return pmuspill::cli::Main(argc, argv); }
