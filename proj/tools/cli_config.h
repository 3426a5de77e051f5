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

#ifndef PMUSPILL_TOOLS_CLI_CONFIG_H_
#define PMUSPILL_TOOLS_CLI_CONFIG_H_

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmuspill/environment.h"
#include "pmuspill/ingest.h"
#include "pmuspill/mitigation.h"

namespace pmuspill::cli {

// Every knob a command reads. Flags and the config file fill the same
// fields; flags win.
struct RunConfig {
  // Inputs.
  std::string catalog;
  std::string augment;
  std::string instructions;
  std::string filter;
  std::string mapping;
  double attach_probability = 0.15;

  // Environment.
  std::string policy = "vulnerable";
  bool tee_gate = false;
  std::vector<std::string> disable_events;
  std::string suppression = "tsx";
  double noise = 0.0;
  double burst = 0.0;
  double burst_continue = 0.5;
  std::optional<uint64_t> seed;
  int slots = 8;
  int predictor_init = 1;
  int window = 64;
  int resolve_delay = 1;

  // Attack.
  std::string event = "BR_MISP_EXEC.ALL_BRANCHES";
  int rounds = 10;
  int training = 5;
  double clock_hz = 3.4e9;
  int jobs = 1;

  // Sweep.
  std::string scenario = "both";
  int reps = 10;
  int events_per_run = 8;
  int event_limit = 0;
  int instruction_limit = 0;
  std::vector<std::string> events;

  // Demo and evaluation workloads.
  std::string secret_hex;
  std::string secret_file;
  int random_bytes = 256;
  bool rounds_sweep = false;
  int profile_programs = 8;
  bool skip_sweep_check = false;

  // Outputs.
  std::string csv_out;
  std::string json_out;
  std::string trace_out;
  bool quiet = false;
};

// Registers RunConfig's fields as options of `app`, plus --config.
void AddRunOptions(CLI::App& app, RunConfig& config);

// Reads flat key=value (INI/TOML subset) or a JSON object, picked by the
// first non-blank character.
class FlexibleConfig : public CLI::ConfigBase {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

// Fills unset paths from the shipped data directory, resolves the seed
// (flag, config, then PMUSPILL_SEED) and checks the config is runnable.
// Throws ConfigError.
void Finalize(RunConfig& config);

uint64_t Seed(const RunConfig& config);
mitigation::MitigationPolicy PolicyOf(const RunConfig& config);
EnvConfig EnvOf(const RunConfig& config);
ingest::DataPaths PathsOf(const RunConfig& config);

}  // namespace pmuspill::cli

#endif  // PMUSPILL_TOOLS_CLI_CONFIG_H_
