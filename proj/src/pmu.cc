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

#include "pmuspill/pmu.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "pmuspill/errors.h"

namespace pmuspill::pmu {

namespace {

constexpr std::array<std::string_view, kNumStructuralKinds> kStructuralNames = {
    "unmodeled",        "fetch_tag_hit",    "fetch_tag_stall",
    "uop_issued",       "instruction",      "cycles",
    "branch",           "cond_branch",      "cond_taken",
    "cond_not_taken",   "branch_mispredict", "cond_mispredict",
    "recovery_cycles",  "resteer_cycles",   "load",
    "store",            "l1d_hit",          "l1d_miss",
    "resource_stall_cycles", "clflush",     "fence",
    "machine_clear",
};

}  // namespace

std::string_view StructuralName(StructuralKind kind) {
  return kStructuralNames[static_cast<std::size_t>(kind)];
}

std::optional<StructuralKind> ParseStructural(std::string_view name) {
  for (std::size_t i = 0; i < kStructuralNames.size(); ++i) {
    if (kStructuralNames[i] == name) return static_cast<StructuralKind>(i);
  }
  return std::nullopt;
}

std::string_view PersistenceName(Persistence p) {
  return p == Persistence::kSpeculativeCounted ? "SPECULATIVE_COUNTED"
                                               : "RETIREMENT_COUNTED";
}

std::optional<Persistence> ParsePersistence(std::string_view name) {
  if (name == "SPECULATIVE_COUNTED") return Persistence::kSpeculativeCounted;
  if (name == "RETIREMENT_COUNTED") return Persistence::kRetirementCounted;
  return std::nullopt;
}

std::string_view PolicyName(Policy policy) {
  switch (policy) {
    case Policy::kVulnerable: return "VULNERABLE";
    case Policy::kRetireOnly: return "RETIRE_ONLY";
    case Policy::kRenamed: return "RENAMED";
    case Policy::kDisabled: return "DISABLED";
  }
  return "?";
}

std::optional<Policy> ParsePolicy(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return c == '-' ? '_' : std::toupper(c); });
  for (Policy p : {Policy::kVulnerable, Policy::kRetireOnly, Policy::kRenamed,
                   Policy::kDisabled}) {
    if (PolicyName(p) == upper) return p;
  }
  return std::nullopt;
}

std::string_view ReadStatusName(ReadStatus status) {
  switch (status) {
    case ReadStatus::kOk: return "ok";
    case ReadStatus::kPmuDisabled: return "PmuDisabled";
    case ReadStatus::kNoPrivilege: return "NoPrivilege";
    case ReadStatus::kInvalidSlot: return "InvalidSlot";
  }
  return "?";
}

EventIndex Catalog::Add(EventDef event) {
  if (event.name.empty()) throw ParseError("event without a name");
  if (const auto* tagged = std::get_if<TaggedTrigger>(&event.trigger);
      tagged != nullptr && tagged->instructions.empty()) {
    throw ParseError("event " + event.name + " has an empty instruction set");
  }
  const uint64_t key = (uint64_t{event.event_code} << 24) |
                       (uint64_t{event.umask} << 16) |
                       (uint64_t{event.counter_mask} << 8) |
                       (event.invert ? 2u : 0u) | (event.edge_detect ? 1u : 0u);
  if (by_name_.contains(event.name)) {
    throw DuplicateEvent("duplicate event name " + event.name);
  }
  if (keys_.contains(key)) {
    throw DuplicateEvent("duplicate event code/umask for " + event.name);
  }
  keys_.insert(key);
  const auto index = static_cast<EventIndex>(events_.size());
  by_name_.emplace(event.name, index);
  events_.push_back(std::move(event));
  return index;
}

std::optional<EventIndex> Catalog::Find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Catalog::TaggedEventNames() const {
  std::vector<std::string> out;
  for (const auto& e : events_) {
    if (e.is_tagged()) out.push_back(e.name);
  }
  return out;
}

std::vector<EventIndex> Catalog::SpeculativeEvents() const {
  std::vector<EventIndex> out;
  for (EventIndex i = 0; i < events_.size(); ++i) {
    if (events_[i].persistence == Persistence::kSpeculativeCounted) {
      out.push_back(i);
    }
  }
  return out;
}

Platform::Platform(isa::InstructionSet iset, Catalog catalog)
    : iset_(std::move(iset)), catalog_(std::move(catalog)) {
  hits_.resize(iset_.size());
  for (isa::ClassIndex c = 0; c < iset_.size(); ++c) {
    for (const auto& entry : iset_.at(c).signature) {
      if (auto e = catalog_.Find(entry.event)) {
        hits_[c].push_back({*e, entry.increment});
      } else {
        ++unresolved_;
      }
    }
  }
  for (EventIndex e = 0; e < catalog_.size(); ++e) {
    const auto* tagged = std::get_if<TaggedTrigger>(&catalog_.at(e).trigger);
    if (tagged == nullptr) continue;
    for (const auto& id : tagged->instructions) {
      auto c = iset_.Find(id);
      if (!c) {
        ++unresolved_;
        continue;
      }
      auto& hits = hits_[*c];
      bool present = std::any_of(hits.begin(), hits.end(),
                                 [e](const EventHit& h) { return h.event == e; });
      if (!present) hits.push_back({e, 1});
    }
  }
}

std::vector<isa::ClassIndex> Platform::TriggerClasses(EventIndex event) const {
  std::vector<isa::ClassIndex> out;
  for (isa::ClassIndex c = isa::InstructionSet::kBuiltinCount; c < hits_.size();
       ++c) {
    for (const auto& h : hits_[c]) {
      if (h.event == event) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

CounterFile::CounterFile(std::shared_ptr<const Platform> platform,
                         CounterConfig config)
    : platform_(std::move(platform)),
      config_(std::move(config)),
      noise_rng_(DeriveSeed(config_.noise.seed, 0x9015e)) {
  if (config_.slots <= 0 || config_.slots > 255) {
    throw InvalidSlot("slot count must be in 1..255");
  }
  const auto n = static_cast<std::size_t>(config_.slots);
  bound_.assign(n, std::nullopt);
  counts_.assign(n, 0);
  shadow_.assign(n, 0);
  speculative_.assign(n, false);
  baseline_.assign(n, 0);
  reads_.assign(n, 0);
  pending_.assign(n, {});
  event_slots_.assign(platform_->catalog().size(), {});
}

void CounterFile::CheckSlot(int slot) const {
  if (slot < 0 || slot >= config_.slots) {
    throw InvalidSlot("counter slot " + std::to_string(slot) +
                      " outside 0.." + std::to_string(config_.slots - 1));
  }
}

void CounterFile::Unbind(int slot) {
  auto s = static_cast<uint8_t>(slot);
  auto erase = [s](std::vector<uint8_t>& v) {
    v.erase(std::remove(v.begin(), v.end(), s), v.end());
  };
  for (auto& v : structural_slots_) erase(v);
  if (bound_[slot]) erase(event_slots_[*bound_[slot]]);
  bound_[slot].reset();
}

void CounterFile::Program(int slot, EventIndex event) {
  CheckSlot(slot);
  const auto& catalog = platform_->catalog();
  if (event >= catalog.size()) {
    throw UnknownEvent("event index " + std::to_string(event) +
                       " not in catalog");
  }
  const EventDef& def = catalog.at(event);
  if (config_.disabled_events.contains(event)) {
    throw EventDisabled("event " + def.name + " is disabled by policy");
  }
  Unbind(slot);
  bound_[slot] = event;
  counts_[slot] = 0;
  shadow_[slot] = 0;
  reads_[slot] = 0;
  pending_[slot].clear();
  speculative_[slot] = def.persistence == Persistence::kSpeculativeCounted;
  baseline_[slot] = def.baseline;
  const auto s = static_cast<uint8_t>(slot);
  event_slots_[event].push_back(s);
  if (const auto* st = std::get_if<StructuralTrigger>(&def.trigger)) {
    structural_slots_[static_cast<std::size_t>(st->kind)].push_back(s);
  }
}

void CounterFile::Program(int slot, const EventDef& event) {
  auto index = platform_->catalog().Find(event.name);
  if (!index || platform_->catalog().at(*index) != event) {
    throw UnknownEvent("event " + event.name + " not in loaded catalog");
  }
  Program(slot, *index);
}

uint64_t CounterFile::Read(int slot) {
  uint64_t value = 0;
  switch (TryRead(slot, &value)) {
    case ReadStatus::kOk:
      return value;
    case ReadStatus::kPmuDisabled:
      throw PmuDisabled(config_.reads_blocked && config_.policy != Policy::kDisabled
                            ? "PMU reads blocked by TEE gate"
                            : "PMU is disabled");
    case ReadStatus::kNoPrivilege:
      throw NoPrivilege("reading PMU counters requires root");
    case ReadStatus::kInvalidSlot:
      break;
  }
  CheckSlot(slot);
  throw InvalidSlot("counter slot " + std::to_string(slot) +
                    " is not programmed");
}

ReadStatus CounterFile::TryRead(int slot, uint64_t* value) {
  *value = 0;
  if (config_.policy == Policy::kDisabled || config_.reads_blocked) {
    return ReadStatus::kPmuDisabled;
  }
  if (!config_.root) return ReadStatus::kNoPrivilege;
  if (slot < 0 || slot >= config_.slots || !bound_[slot]) {
    return ReadStatus::kInvalidSlot;
  }
  // Every read after the first closes a measurement window.
  if (reads_[slot] > 0) counts_[slot] += baseline_[slot];
  ++reads_[slot];
  auto& pending = pending_[slot];
  for (auto it = pending.begin(); it != pending.end();) {
    if (it->at_read <= reads_[slot]) {
      counts_[slot] += it->amount;
      it = pending.erase(it);
    } else {
      ++it;
    }
  }
  *value = counts_[slot];
  return ReadStatus::kOk;
}

void CounterFile::OnSquash() {
  if (config_.policy == Policy::kRenamed) {
    std::fill(shadow_.begin(), shadow_.end(), 0);
  }
}

void CounterFile::OnRetire() {
  if (config_.policy != Policy::kRenamed) return;
  for (std::size_t s = 0; s < shadow_.size(); ++s) {
    counts_[s] += shadow_[s];
    shadow_[s] = 0;
  }
}

void CounterFile::BeginRun(uint64_t windows, uint64_t reads_per_window) {
  if (windows == 0 || reads_per_window == 0) return;
  const auto& noise = config_.noise;
  if (noise.p <= 0.0 && noise.burst_p <= 0.0) return;
  for (int slot = 0; slot < config_.slots; ++slot) {
    if (!bound_[slot]) continue;
    if (noise_rng_.Bernoulli(noise.p)) {
      pending_[slot].push_back(
          {reads_[slot] + (1 + noise_rng_.Below(windows)) * reads_per_window, 1});
    }
    if (noise_rng_.Bernoulli(noise.burst_p)) {
      const uint64_t length = 1 + noise_rng_.Geometric(1.0 - noise.burst_continue);
      pending_[slot].push_back(
          {reads_[slot] + (1 + noise_rng_.Below(windows)) * reads_per_window,
           length});
    }
  }
}

}  // namespace pmuspill::pmu
