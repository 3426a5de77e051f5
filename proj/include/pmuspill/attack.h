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

#ifndef PMUSPILL_ATTACK_H_
#define PMUSPILL_ATTACK_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmuspill/environment.h"
#include "pmuspill/isa.h"
#include "pmuspill/pmu.h"

namespace pmuspill::attack {

struct GadgetSpec {
  // Class ids of the unequal-path and equal-path slots.
  std::string ins1 = "uop.nop";
  std::string ins2 = "uop.nop";
  int training_rounds = 5;
  int comparison_domain = 256;
  uint64_t addr_neq = 0x30000;
  uint64_t addr_eq = 0x30100;
  uint64_t trainer_addr = 0x20000;
  uint64_t secret_addr = 0x10000;
  // Counter slots read around each probe, in read order.
  std::vector<int> slots = {0};
  uint8_t line_bytes = 64;
};

// Throws InvalidSpec on a broken spec, or if a slot class is missing from
// `iset` or cannot occupy a slot.
void ValidateSpec(const GadgetSpec& spec, const isa::InstructionSet& iset);

std::string RenderGadgetSource(const GadgetSpec& spec,
                               const isa::InstructionSet& iset);

struct Gadget {
  GadgetSpec spec;
  isa::Program program;
  // Instructions patched when the gadget is reused.
  std::vector<uint32_t> secret_movs;
  uint32_t ins1_at = 0;
  uint32_t ins2_at = 0;
};

Gadget BuildGadget(const GadgetSpec& spec, const isa::InstructionSet& iset);

// Points an existing gadget at another secret byte.
void RetargetSecret(Gadget& gadget, uint64_t secret_addr);
// Swaps the class in one path slot without reassembling.
void SetSlotClass(Gadget& gadget, const isa::InstructionSet& iset, int slot,
                  isa::ClassIndex cls);

struct RecoveryTrace {
  std::vector<uint64_t> deltas;
  int round_index = 0;
  int slot = 0;
};

// JSON array of the deltas.
std::string DumpTrace(const RecoveryTrace& trace);

using Decode = std::optional<uint32_t>;

// The index whose delta value occurs exactly once, when there is exactly one
// such value.
Decode DecodeTrace(const RecoveryTrace& trace);
Decode DecodeDeltas(std::span<const uint64_t> deltas);

// Strict plurality of the conclusive decodes. Throws InvalidSpec on an empty
// list.
Decode MajorityVote(std::span<const Decode> decodes);

enum class FailureReason : uint8_t {
  kNone,
  kNoConclusiveRound,
  kNoMajority,
  kPmuUnavailable,
  kEventUnavailable,
};

std::string_view FailureName(FailureReason reason);

struct LeakOutcome {
  Decode value;
  FailureReason failure = FailureReason::kNone;
  std::vector<RecoveryTrace> traces;
  std::vector<Decode> round_decodes;
  uint64_t core_executions = 0;
  uint64_t simulated_cycles = 0;

  bool ok() const { return value.has_value(); }
};

// Leaks the byte the gadget points at, once per event: events[k] is read
// through spec.slots[k]. Each call uses a fresh machine and counter file;
// `stream` keys the noise draws.
std::vector<LeakOutcome> LeakByteMulti(const Environment& env,
                                       const Gadget& gadget,
                                       std::span<const pmu::EventIndex> events,
                                       int rounds, uint64_t stream);

LeakOutcome LeakByte(const Environment& env, const Gadget& gadget,
                     pmu::EventIndex event, int rounds, uint64_t stream);

// Leaks secret bytes [0, count) with one event, in parallel over `jobs`
// threads. Results are in byte order. Traces are dropped unless
// `keep_traces` is set.
std::vector<LeakOutcome> LeakSecret(
    const Environment& env, const GadgetSpec& spec, pmu::EventIndex event,
    int rounds, std::size_t count, int jobs,
    const std::function<void(std::size_t)>& progress = {},
    bool keep_traces = false);

struct Metrics {
  uint64_t bytes = 0;
  uint64_t failures = 0;
  uint64_t wrong = 0;
  double executions_per_byte = 0;
  double cycles_per_byte = 0;
  // Bytes per simulated second at the configured clock.
  double throughput = 0;
  double error_rate = 0;
};

Metrics MeasureMetrics(std::span<const LeakOutcome> outcomes,
                       std::span<const uint8_t> truth, double clock_hz);

enum class Scenario : uint8_t { kS1, kS2 };

std::string_view ScenarioName(Scenario s);
std::optional<Scenario> ParseScenario(std::string_view name);

struct SweepConfig {
  std::vector<Scenario> scenarios = {Scenario::kS1, Scenario::kS2};
  int reps = 10;
  uint8_t secret = 0x5A;
  int jobs = 1;
  // Events measured side by side in one gadget run, up to the slot count.
  int events_per_run = 8;
  // Empty selects every catalog event / every ingested class.
  std::vector<pmu::EventIndex> events;
  std::vector<isa::ClassIndex> instructions;
  mitigation::MitigationPolicy policy;
  EnvConfig env;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct SweepCell {
  pmu::EventIndex event = 0;
  Scenario scenario = Scenario::kS1;
  isa::ClassIndex cls = 0;
  bool trigger = false;
  Decode decoded;
  FailureReason failure = FailureReason::kNone;
  // Rounds that decoded to something other than the planted secret.
  uint32_t round_errors = 0;
};

struct EventSummary {
  std::string event_name;
  std::string category;
  Scenario scenario = Scenario::kS1;
  uint64_t tested = 0;
  uint64_t trigger_count = 0;
  // Over trigger cells: wrong or inconclusive rounds / all rounds.
  double error_rate = 0;
  bool vulnerable = false;

  friend bool operator==(const EventSummary&, const EventSummary&) = default;
};

struct SweepReport {
  // Ordered by (event, scenario, class).
  std::vector<SweepCell> cells;
  // Ordered by (event, scenario).
  std::vector<EventSummary> summary;
  uint64_t gadget_executions = 0;
  uint64_t simulator_runs = 0;
  int reps = 0;

  // Events flagged in at least one scenario.
  std::vector<std::string> VulnerableEvents() const;
  std::string ToCsv() const;
  std::string ToJson(const pmu::Platform& platform) const;
};

// Parses ToCsv output back into summary rows. Throws ParseError.
std::vector<EventSummary> ReadSummaryCsv(std::string_view csv);

SweepReport Sweep(std::shared_ptr<const pmu::Platform> platform,
                  const SweepConfig& config);

}  // namespace pmuspill::attack

#endif  // PMUSPILL_ATTACK_H_
