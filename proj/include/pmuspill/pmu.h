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

#ifndef PMUSPILL_PMU_H_
#define PMUSPILL_PMU_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pmuspill/isa.h"
#include "pmuspill/rng.h"

namespace pmuspill::pmu {

// Events the pipeline raises by itself, independent of which instruction
// class occupies a gadget slot.
enum class StructuralKind : uint8_t {
  kUnmodeled,  // never raised; catalog entries the model does not drive
  kFetchTagHit,
  kFetchTagStall,
  kUopIssued,
  kInstruction,
  kCycles,
  kBranch,
  kCondBranch,
  kCondTaken,
  kCondNotTaken,
  kBranchMispredict,
  kCondMispredict,
  kRecoveryCycles,
  kResteerCycles,
  kLoad,
  kStore,
  kL1dHit,
  kL1dMiss,
  kResourceStallCycles,
  kClflush,
  kFence,
  kMachineClear,
};
constexpr std::size_t kNumStructuralKinds = 22;

std::string_view StructuralName(StructuralKind kind);
std::optional<StructuralKind> ParseStructural(std::string_view name);

enum class Persistence : uint8_t { kSpeculativeCounted, kRetirementCounted };

std::string_view PersistenceName(Persistence p);
std::optional<Persistence> ParsePersistence(std::string_view name);

struct StructuralTrigger {
  StructuralKind kind = StructuralKind::kUnmodeled;
  friend bool operator==(const StructuralTrigger&,
                         const StructuralTrigger&) = default;
};

// Fires when one of the listed instruction classes (by id) executes.
struct TaggedTrigger {
  std::vector<std::string> instructions;
  friend bool operator==(const TaggedTrigger&, const TaggedTrigger&) = default;
};

using Trigger = std::variant<StructuralTrigger, TaggedTrigger>;

struct EventDef {
  std::string name;
  std::string category;
  std::string description;
  uint8_t event_code = 0;
  uint8_t umask = 0;
  // Qualifiers some catalogs use to tell apart events sharing a code/umask.
  uint8_t counter_mask = 0;
  bool invert = false;
  bool edge_detect = false;
  Trigger trigger;
  Persistence persistence = Persistence::kRetirementCounted;
  // Constant accrued by the counter in every measurement window.
  uint32_t baseline = 0;
  std::string provenance;

  bool is_tagged() const { return std::holds_alternative<TaggedTrigger>(trigger); }
  friend bool operator==(const EventDef&, const EventDef&) = default;
};

using EventIndex = uint32_t;

class Catalog {
 public:
  // Throws DuplicateEvent on a repeated name or (code, umask, qualifiers), and
  // ParseError on an empty tagged set.
  EventIndex Add(EventDef event);

  const EventDef& at(EventIndex index) const { return events_.at(index); }
  std::optional<EventIndex> Find(std::string_view name) const;
  std::size_t size() const { return events_.size(); }
  std::span<const EventDef> events() const { return events_; }

  std::vector<std::string> TaggedEventNames() const;
  std::vector<EventIndex> SpeculativeEvents() const;

 private:
  std::vector<EventDef> events_;
  std::unordered_map<std::string, EventIndex> by_name_;
  std::set<uint64_t> keys_;
};

struct EventHit {
  EventIndex event;
  uint32_t increment;
};

// An instruction set bound to a catalog: for every class, the catalog events
// its execution raises (its own signature plus every tagged set naming it).
class Platform {
 public:
  Platform(isa::InstructionSet iset, Catalog catalog);

  const isa::InstructionSet& iset() const { return iset_; }
  const Catalog& catalog() const { return catalog_; }
  std::span<const EventHit> HitsFor(isa::ClassIndex cls) const {
    return hits_[cls];
  }
  // Ingested classes whose execution raises `event`.
  std::vector<isa::ClassIndex> TriggerClasses(EventIndex event) const;
  // Signature or tagged-set names that matched nothing.
  std::size_t unresolved_references() const { return unresolved_; }

 private:
  isa::InstructionSet iset_;
  Catalog catalog_;
  std::vector<std::vector<EventHit>> hits_;
  std::size_t unresolved_ = 0;
};

enum class Policy : uint8_t { kVulnerable, kRetireOnly, kRenamed, kDisabled };

std::string_view PolicyName(Policy policy);
std::optional<Policy> ParsePolicy(std::string_view name);

struct NoiseConfig {
  // Per gadget run and counter: probability of one spurious increment.
  double p = 0.0;
  // Unisolated-core mode: probability of a burst per gadget run; the burst
  // length is 1 + Geometric(1 - burst_continue).
  double burst_p = 0.0;
  double burst_continue = 0.5;
  uint64_t seed = 0;
};

enum class ReadStatus : uint8_t { kOk, kPmuDisabled, kNoPrivilege, kInvalidSlot };

std::string_view ReadStatusName(ReadStatus status);

struct CounterConfig {
  int slots = 8;
  Policy policy = Policy::kVulnerable;
  NoiseConfig noise;
  bool root = true;
  // Set by TEE gating when the PMU must not be observable.
  bool reads_blocked = false;
  std::set<EventIndex> disabled_events;
};

class CounterFile {
 public:
  CounterFile(std::shared_ptr<const Platform> platform, CounterConfig config);

  // Resets the slot to 0 and binds it. Throws InvalidSlot, UnknownEvent, or
  // EventDisabled.
  void Program(int slot, EventIndex event);
  void Program(int slot, const EventDef& event);

  // Throws PmuDisabled, NoPrivilege, or InvalidSlot (bad or unprogrammed).
  uint64_t Read(int slot);
  // Same as Read but reports failure as a status; `*value` is 0 on failure.
  ReadStatus TryRead(int slot, uint64_t* value);

  // Raw state, no accrual and no access checks.
  uint64_t Peek(int slot) const { return counts_.at(slot); }
  uint64_t Shadow(int slot) const { return shadow_.at(slot); }
  std::optional<EventIndex> Programmed(int slot) const { return bound_.at(slot); }

  void OnStructural(pmu::StructuralKind kind, uint32_t increment,
                    bool transient) {
    for (uint8_t slot : structural_slots_[static_cast<std::size_t>(kind)]) {
      Apply(slot, increment, transient);
    }
  }
  void OnInstruction(isa::ClassIndex cls, bool transient) {
    for (const auto& hit : platform_->HitsFor(cls)) {
      for (uint8_t slot : event_slots_[hit.event]) {
        Apply(slot, hit.increment, transient);
      }
    }
  }
  void OnEvent(EventIndex event, uint32_t increment, bool transient) {
    for (uint8_t slot : event_slots_.at(event)) Apply(slot, increment, transient);
  }

  void OnSquash();
  void OnRetire();

  // Starts a gadget run made of `windows` measurement windows per slot, each
  // closed by its `reads_per_window`-th read, and draws the run's spurious
  // increments. An increment lands on the closing read of a uniformly chosen
  // window.
  void BeginRun(uint64_t windows, uint64_t reads_per_window = 1);

  Policy policy() const { return config_.policy; }
  const CounterConfig& config() const { return config_; }
  int slot_count() const { return config_.slots; }
  const Platform& platform() const { return *platform_; }

 private:
  struct Pending {
    uint64_t at_read;
    uint64_t amount;
  };

  void Apply(uint8_t slot, uint32_t increment, bool transient) {
    if (!transient) {
      counts_[slot] += increment;
      return;
    }
    if (!speculative_[slot]) return;
    if (config_.policy == Policy::kVulnerable) {
      counts_[slot] += increment;
    } else if (config_.policy == Policy::kRenamed) {
      shadow_[slot] += increment;
    }
  }
  void CheckSlot(int slot) const;
  void Unbind(int slot);

  std::shared_ptr<const Platform> platform_;
  CounterConfig config_;
  Rng noise_rng_;
  std::vector<std::optional<EventIndex>> bound_;
  std::vector<uint64_t> counts_;
  std::vector<uint64_t> shadow_;
  std::vector<bool> speculative_;
  std::vector<uint32_t> baseline_;
  std::vector<uint64_t> reads_;
  std::vector<std::vector<Pending>> pending_;
  std::array<std::vector<uint8_t>, kNumStructuralKinds> structural_slots_;
  std::vector<std::vector<uint8_t>> event_slots_;
};

}  // namespace pmuspill::pmu

#endif  // PMUSPILL_PMU_H_
