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

#include "cli_config.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "pmuspill/errors.h"

#ifndef PMUSPILL_DATA_DIR
#define PMUSPILL_DATA_DIR "data"
#endif

namespace pmuspill::cli {

namespace {

namespace fs = std::filesystem;

std::string Scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw CLI::ConversionError("config values must be scalars or arrays");
}

void ResolvePath(std::string& path, const char* file) {
  if (path.empty()) path = (fs::path(PMUSPILL_DATA_DIR) / file).string();
}

void RequireFile(const std::string& what, const std::string& path) {
  if (!fs::exists(path)) {
    throw ConfigError(what + " file not found: " + path);
  }
}

bool IsNone(const std::string& s) { return s == "none" || s == "-"; }

}  // namespace

std::vector<CLI::ConfigItem> FlexibleConfig::from_config(
    std::istream& input) const {
  std::string text{std::istreambuf_iterator<char>(input),
                   std::istreambuf_iterator<char>()};
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  if (first == text.size() || text[first] != '{') {
    std::istringstream flat(text);
    return CLI::ConfigBase::from_config(flat);
  }
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ConversionError(std::string("config: ") + e.what());
  }
  std::vector<CLI::ConfigItem> items;
  for (const auto& [key, value] : root.items()) {
    CLI::ConfigItem item;
    item.name = key;
    if (value.is_array()) {
      for (const auto& v : value) item.inputs.push_back(Scalar(v));
    } else {
      item.inputs.push_back(Scalar(value));
    }
    items.push_back(std::move(item));
  }
  return items;
}

void AddRunOptions(CLI::App& app, RunConfig& c) {
  app.config_formatter(std::make_shared<FlexibleConfig>());
  app.set_config("--config", "", "Config file: key=value lines or a JSON object");

  const std::string in = "Inputs";
  app.add_option("--catalog", c.catalog, "Event catalog JSON")->group(in);
  app.add_option("--augment", c.augment, "Extra events JSON, or 'none'")->group(in);
  app.add_option("--instructions", c.instructions, "Instruction database XML")
      ->group(in);
  app.add_option("--filter", c.filter, "Instruction filter JSON, or 'none'")
      ->group(in);
  app.add_option("--mapping", c.mapping, "Explicit mnemonic signature JSON")
      ->group(in);
  app.add_option("--attach-probability", c.attach_probability,
                 "Chance an unmapped instruction gets a synthetic event")
      ->check(CLI::Range(0.0, 1.0))
      ->group(in);

  const std::string env = "Environment";
  app.add_option("--policy", c.policy,
                 "vulnerable | retire-only | renamed | disabled")
      ->group(env);
  app.add_flag("--tee-gate", c.tee_gate,
               "Refuse to provision the secret while the PMU is usable")
      ->group(env);
  app.add_option("--disable-event", c.disable_events,
                 "Event that may not be programmed (repeatable)")
      ->group(env);
  app.add_option("--suppression", c.suppression, "tsx | handler")->group(env);
  app.add_option("--noise", c.noise, "Spurious increment probability per run")
      ->check(CLI::Range(0.0, 1.0))
      ->group(env);
  app.add_option("--burst", c.burst, "Burst probability per run")
      ->check(CLI::Range(0.0, 1.0))
      ->group(env);
  app.add_option("--burst-continue", c.burst_continue,
                 "Burst continuation probability")
      ->check(CLI::Range(0.0, 0.99))
      ->group(env);
  app.add_option("--seed", c.seed, "Seed; falls back to PMUSPILL_SEED")
      ->group(env);
  app.add_option("--slots", c.slots, "Programmable counters")
      ->check(CLI::Range(1, 255))
      ->group(env);
  app.add_option("--predictor-init", c.predictor_init,
                 "Initial 2-bit counter value")
      ->check(CLI::Range(0, 3))
      ->group(env);
  app.add_option("--window", c.window, "Transient window in ops")
      ->check(CLI::Range(1, 1 << 20))
      ->group(env);
  app.add_option("--resolve-delay", c.resolve_delay,
                 "Wrong-path ops before a branch resolves")
      ->check(CLI::Range(0, 1 << 20))
      ->group(env);

  const std::string atk = "Attack";
  app.add_option("--event", c.event, "Event used to leak")->group(atk);
  app.add_option("--rounds", c.rounds, "Gadget rounds per byte")
      ->check(CLI::Range(1, 1000))
      ->group(atk);
  app.add_option("--training", c.training, "Training calls per probe")
      ->check(CLI::Range(0, 100))
      ->group(atk);
  app.add_option("--clock-hz", c.clock_hz, "Clock for the throughput model")
      ->check(CLI::PositiveNumber)
      ->group(atk);
  app.add_option("--jobs", c.jobs, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->group(atk);

  const std::string sw = "Sweep";
  app.add_option("--scenario", c.scenario, "s1 | s2 | both")->group(sw);
  app.add_option("--reps", c.reps, "Leak repetitions per cell")
      ->check(CLI::Range(1, 1000))
      ->group(sw);
  app.add_option("--events-per-run", c.events_per_run,
                 "Events measured side by side")
      ->check(CLI::Range(1, 255))
      ->group(sw);
  app.add_option("--event-limit", c.event_limit,
                 "Use only the first N catalog events (0 = all)")
      ->check(CLI::NonNegativeNumber)
      ->group(sw);
  app.add_option("--instruction-limit", c.instruction_limit,
                 "Use only N evenly spaced instructions (0 = all)")
      ->check(CLI::NonNegativeNumber)
      ->group(sw);
  app.add_option("--sweep-event", c.events, "Restrict the sweep to an event")
      ->group(sw);

  const std::string demo = "Workload";
  app.add_option("--secret-hex", c.secret_hex, "Secret as hex digits")
      ->group(demo);
  app.add_option("--secret-file", c.secret_file, "Secret as raw bytes")
      ->group(demo);
  app.add_option("--random-bytes", c.random_bytes,
                 "Seeded random secret length when no secret is given")
      ->check(CLI::Range(1, 1 << 24))
      ->group(demo);
  app.add_flag("--rounds-sweep", c.rounds_sweep,
               "Also model throughput for 1..rounds rounds")
      ->group(demo);
  app.add_option("--profile-programs", c.profile_programs,
                 "Benchmark programs for the profiling-fidelity check")
      ->check(CLI::Range(1, 10000))
      ->group(demo);
  app.add_flag("--skip-sweep-check", c.skip_sweep_check,
               "Skip the sweep-under-policy column")
      ->group(demo);

  const std::string out = "Output";
  app.add_option("--csv", c.csv_out, "CSV output path")->group(out);
  app.add_option("--json", c.json_out, "JSON output path")->group(out);
  app.add_option("--trace-out", c.trace_out,
                 "demo-leak: per-round delta arrays, one JSON line each")
      ->group(out);
  app.add_flag("--quiet", c.quiet, "No progress on stderr")->group(out);
}

void Finalize(RunConfig& c) {
  ResolvePath(c.catalog, "skylake_sample.json");
  ResolvePath(c.augment, "skylake_augment.json");
  ResolvePath(c.instructions, "instructions_sample.xml");
  ResolvePath(c.filter, "instruction_filter.json");
  RequireFile("catalog", c.catalog);
  RequireFile("instruction", c.instructions);
  if (!IsNone(c.augment)) RequireFile("augment", c.augment);
  if (!IsNone(c.filter)) RequireFile("filter", c.filter);
  if (!c.mapping.empty() && !IsNone(c.mapping)) RequireFile("mapping", c.mapping);
  if (!c.secret_file.empty()) RequireFile("secret", c.secret_file);
  if (!c.secret_hex.empty() && !c.secret_file.empty()) {
    throw ConfigError("give either --secret-hex or --secret-file");
  }

  if (!c.seed) {
    if (const char* env = std::getenv("PMUSPILL_SEED"); env && *env) {
      uint64_t v = 0;
      const std::string_view s(env);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("PMUSPILL_SEED is not an unsigned integer");
      }
      c.seed = v;
    }
  }
  if (!c.seed && (c.noise > 0.0 || c.burst > 0.0)) {
    throw ConfigError("a noisy run needs --seed or PMUSPILL_SEED");
  }
  if (!pmu::ParsePolicy(c.policy)) {
    throw ConfigError("unknown policy '" + c.policy + "'");
  }
  if (c.suppression != "tsx" && c.suppression != "handler") {
    throw ConfigError("suppression must be 'tsx' or 'handler'");
  }
  if (c.scenario != "s1" && c.scenario != "s2" && c.scenario != "both") {
    throw ConfigError("scenario must be s1, s2 or both");
  }
}

uint64_t Seed(const RunConfig& c) { return c.seed.value_or(1); }

mitigation::MitigationPolicy PolicyOf(const RunConfig& c) {
  mitigation::MitigationPolicy p;
  p.pmu_policy = *pmu::ParsePolicy(c.policy);
  p.tee_gate = c.tee_gate;
  p.per_event_disable.insert(c.disable_events.begin(), c.disable_events.end());
  return p;
}

EnvConfig EnvOf(const RunConfig& c) {
  EnvConfig e;
  e.sim.predictor_initial = static_cast<uint8_t>(c.predictor_init);
  e.sim.transient_window = static_cast<uint32_t>(c.window);
  e.sim.branch_resolve_delay = static_cast<uint32_t>(c.resolve_delay);
  e.noise.p = c.noise;
  e.noise.burst_p = c.burst;
  e.noise.burst_continue = c.burst_continue;
  e.noise.seed = Seed(c);
  e.slots = c.slots;
  e.suppression = c.suppression == "handler"
                      ? sim::SuppressionMode::kSoftwareHandler
                      : sim::SuppressionMode::kTsxLike;
  return e;
}

ingest::DataPaths PathsOf(const RunConfig& c) {
  ingest::DataPaths p;
  p.catalog = c.catalog;
  if (!IsNone(c.augment)) p.augment = c.augment;
  p.instructions = c.instructions;
  if (!IsNone(c.filter)) p.filter = c.filter;
  if (!c.mapping.empty() && !IsNone(c.mapping)) p.mapping = c.mapping;
  return p;
}

}  // namespace pmuspill::cli
