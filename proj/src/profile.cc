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

#include "pmuspill/profile.h"

#include <algorithm>
#include <sstream>

#include "pmuspill/rng.h"
#include "pmuspill/sim.h"

namespace pmuspill::profile {

namespace {

constexpr uint64_t kScratchBase = 0x40000;
constexpr uint64_t kScratchBytes = 0x2000;

}  // namespace

std::string BenchmarkSource(const isa::InstructionSet& iset, uint64_t seed,
                            std::size_t length) {
  std::vector<std::string> slot_ids;
  for (isa::ClassIndex c : iset.Ingested()) {
    const auto& cls = iset.at(c);
    if (cls.fault == isa::Fault::kNone &&
        (cls.kind == isa::Kind::kNop || cls.kind == isa::Kind::kTrigger)) {
      slot_ids.push_back(cls.id);
    }
  }
  Rng rng(seed);
  std::ostringstream out;
  int next_label = 0;
  for (std::size_t i = 0; i < length; ++i) {
    const uint64_t addr = kScratchBase + rng.Below(kScratchBytes);
    const auto reg = 1 + rng.Below(12);
    switch (rng.Below(8)) {
      case 0:
        out << "  mov r" << reg << ", " << rng.Below(256) << "\n";
        break;
      case 1:
        out << "  mov r13, " << addr << "\n  load r" << reg << ", [r13]\n";
        break;
      case 2:
        out << "  mov r13, " << addr << "\n  store [r13], r" << reg << "\n";
        break;
      case 3:
        out << "  mov r13, " << addr << "\n  clflush [r13]\n";
        break;
      case 4:
        out << "  fence\n";
        break;
      case 5:
        out << "  jmp b" << next_label << "\n  nop\nb" << next_label << ":\n";
        ++next_label;
        break;
      default:
        if (slot_ids.empty()) {
          out << "  nop\n";
        } else {
          out << "  trigger "
              << isa::QuoteId(slot_ids[rng.Below(slot_ids.size())]) << "\n";
        }
        break;
    }
  }
  return out.str();
}

std::vector<std::optional<uint64_t>> ProfileCounts(
    const Environment& env, const isa::Program& program,
    std::span<const pmu::EventIndex> events) {
  std::vector<std::optional<uint64_t>> counts(events.size());
  const auto slots = static_cast<std::size_t>(env.config().slots);
  for (std::size_t first = 0; first < events.size(); first += slots) {
    const std::size_t n = std::min(slots, events.size() - first);
    sim::MachineState machine = env.NewMachine();
    pmu::CounterFile counters = env.NewCounters(first);
    for (std::size_t k = 0; k < n; ++k) {
      counters.Program(static_cast<int>(k), events[first + k]);
    }
    env.simulator().Run(program, machine, counters, env.config().suppression);
    for (std::size_t k = 0; k < n; ++k) {
      uint64_t value = 0;
      if (counters.TryRead(static_cast<int>(k), &value) == pmu::ReadStatus::kOk) {
        counts[first + k] = value;
      }
    }
  }
  return counts;
}

}  // namespace pmuspill::profile
