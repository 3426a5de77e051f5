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

#ifndef PMUSPILL_SIM_H_
#define PMUSPILL_SIM_H_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pmuspill/isa.h"
#include "pmuspill/pmu.h"

namespace pmuspill::sim {

struct CacheGeometry {
  uint32_t sets = 64;
  uint32_t ways = 8;
  uint32_t line_bytes = 64;
};

// Set-associative data cache with true LRU replacement. Only presence is
// tracked; data lives in Memory.
class Cache {
 public:
  explicit Cache(CacheGeometry geometry = {});

  // Returns true on a hit. A miss fills the line, evicting the LRU way.
  bool Access(uint64_t addr);
  void Flush(uint64_t addr);
  bool Contains(uint64_t addr) const;

  uint32_t SetIndex(uint64_t addr) const {
    return static_cast<uint32_t>((addr / geometry_.line_bytes) % geometry_.sets);
  }
  // Ranks of the ways of `set`, 0 = most recently used. Always a permutation
  // of 0..ways-1.
  std::vector<uint32_t> Ranks(uint32_t set) const;
  std::size_t ValidLines(uint32_t set) const;
  const CacheGeometry& geometry() const { return geometry_; }

 private:
  struct Way {
    uint64_t tag = 0;
    bool valid = false;
    uint32_t rank = 0;
  };
  void Touch(uint32_t set, uint32_t way);
  Way* Lookup(uint64_t addr);

  CacheGeometry geometry_;
  std::vector<Way> ways_;
};

// Per-branch two-bit saturating counters; predicts taken at 2 or 3.
class Predictor {
 public:
  explicit Predictor(uint8_t initial = 1) : initial_(initial & 3) {}

  bool Predict(uint32_t pc) const { return Counter(pc) >= 2; }
  void Update(uint32_t pc, bool taken);
  uint8_t Counter(uint32_t pc) const {
    return pc < table_.size() && table_[pc] != kUnseen ? table_[pc] : initial_;
  }
  uint8_t initial() const { return initial_; }

 private:
  static constexpr uint8_t kUnseen = 0xff;
  uint8_t initial_;
  std::vector<uint8_t> table_;
};

// Sparse byte-addressed memory. Unwritten bytes read as zero.
class Memory {
 public:
  static constexpr uint64_t kPageBytes = 4096;

  Memory() = default;
  Memory(const Memory& other) : pages_(other.pages_) {}
  Memory& operator=(const Memory& other) {
    pages_ = other.pages_;
    last_ = nullptr;
    last_page_ = ~uint64_t{0};
    return *this;
  }

  uint8_t Read(uint64_t addr) const;
  void Write(uint64_t addr, uint8_t value);
  bool Mapped(uint64_t addr) const { return pages_.contains(addr / kPageBytes); }
  void Unmap(uint64_t begin, uint64_t end);

  // Content equality; an absent page equals an all-zero page.
  friend bool operator==(const Memory& a, const Memory& b);

 private:
  using Page = std::array<uint8_t, kPageBytes>;
  std::unordered_map<uint64_t, Page> pages_;
  mutable uint64_t last_page_ = ~uint64_t{0};
  mutable Page* last_ = nullptr;
};

struct AddressRange {
  uint64_t begin = 0;
  uint64_t end = 0;  // exclusive
  bool Contains(uint64_t addr) const { return addr >= begin && addr < end; }
  bool empty() const { return end <= begin; }
};

enum class Mode : uint8_t { kArchitectural, kTransient };
enum class RegionKind : uint8_t { kFault, kWrongPath };
enum class ForwardMode : uint8_t { kSecret, kZero };
enum class SuppressionMode : uint8_t { kTsxLike, kSoftwareHandler };

std::string_view ModeName(Mode mode);
std::string_view SuppressionName(SuppressionMode mode);

struct ArchState {
  std::array<uint64_t, isa::kNumRegisters> regs{};
  uint32_t pc = 0;
  bool zf = false;
  friend bool operator==(const ArchState&, const ArchState&) = default;
};

// One open transient region. Regions nest at most two deep: a wrong path may
// open inside a fault window.
struct Region {
  RegionKind kind = RegionKind::kFault;
  ArchState saved;
  std::size_t undo_mark = 0;
  uint32_t resume_pc = 0;
  uint32_t budget = 0;
  // Wrong paths only: the branch and its real direction.
  uint32_t branch_pc = 0;
  bool branch_taken = false;
  bool opened_transient = false;
  std::size_t log_mark = 0;
};

struct SimConfig {
  uint32_t transient_window = 64;
  uint32_t branch_resolve_delay = 1;
  uint8_t predictor_initial = 1;
  ForwardMode forward = ForwardMode::kSecret;
  uint64_t cycle_cap = uint64_t{1} << 40;
  uint32_t miss_penalty = 150;
  uint32_t recovery_cycles = 20;
  uint32_t resteer_cycles = 12;
  uint32_t handler_entry_cycles = 600;
  CacheGeometry cache;
};

struct MachineState {
  explicit MachineState(const SimConfig& config = {});

  ArchState arch;
  Memory mem;
  Cache cache;
  Predictor predictor;
  AddressRange secret_region;
  // False when the enclave refused to load: the region holds no data and
  // nothing can be forwarded from it.
  bool secret_mapped = true;
  bool tee_protection = true;
  Mode mode = Mode::kArchitectural;
  // Remaining budget of the innermost region; the full window otherwise.
  uint32_t transient_budget = 0;
  uint32_t window = 0;
  std::vector<Region> regions;
  std::vector<std::pair<uint64_t, uint8_t>> undo;
  uint64_t cycle = 0;
};

struct LogRecord {
  uint32_t pc = 0;
  isa::Kind kind = isa::Kind::kNop;
  bool handler = false;
  Mode mode = Mode::kArchitectural;
  bool squashed = false;
  uint64_t cycle = 0;
  std::vector<std::pair<std::string, uint32_t>> events;
};

struct ExecutionLog {
  std::vector<LogRecord> records;
  std::string ToJsonLines() const;
};

struct PmuRead {
  uint32_t pc = 0;
  uint8_t slot = 0;
  uint64_t value = 0;
  pmu::ReadStatus status = pmu::ReadStatus::kOk;
};

struct RunStats {
  uint64_t retired = 0;
  uint64_t squashed = 0;
  uint64_t faults = 0;
  uint64_t mispredicts = 0;
  uint64_t squashes = 0;
  uint64_t handler_calls = 0;
};

struct RunResult {
  std::vector<PmuRead> reads;
  RunStats stats;
  ExecutionLog log;
};

struct RunOptions {
  bool record_log = false;
};

class Simulator {
 public:
  explicit Simulator(SimConfig config = {}) : config_(config) {}

  // Executes `program` from state.arch.pc until it falls off the end with no
  // open region. Throws BudgetExhausted past the cycle cap.
  RunResult Run(const isa::Program& program, MachineState& state,
                pmu::CounterFile& counters, SuppressionMode suppression,
                RunOptions options = {}) const;

  const SimConfig& config() const { return config_; }

 private:
  SimConfig config_;
};

// Opens a region by hand, as a fault or misprediction would.
void EnterTransient(MachineState& state, RegionKind kind, uint32_t resume_pc,
                    uint32_t budget);

// Closes the innermost region: restores registers, pc, flags and memory to
// the region's entry and discards transient counter state. Cache and
// predictor changes stay. Throws IllegalSquash with no open region.
void Squash(MachineState& state, pmu::CounterFile* counters = nullptr,
            const SimConfig& config = {});

}  // namespace pmuspill::sim

#endif  // PMUSPILL_SIM_H_
