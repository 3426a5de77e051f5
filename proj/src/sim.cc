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

#include "pmuspill/sim.h"

#include <algorithm>

#include "json.hpp"
#include "pmuspill/errors.h"

namespace pmuspill::sim {

using isa::Kind;
using pmu::StructuralKind;

std::string_view ModeName(Mode mode) {
  return mode == Mode::kArchitectural ? "ARCHITECTURAL" : "TRANSIENT";
}

std::string_view SuppressionName(SuppressionMode mode) {
  return mode == SuppressionMode::kTsxLike ? "TSX_LIKE" : "SOFTWARE_HANDLER";
}

Cache::Cache(CacheGeometry geometry) : geometry_(geometry) {
  if (geometry_.sets == 0 || geometry_.ways == 0 || geometry_.line_bytes == 0) {
    throw ConfigError("cache geometry must be non-zero");
  }
  ways_.resize(std::size_t{geometry_.sets} * geometry_.ways);
  for (uint32_t s = 0; s < geometry_.sets; ++s) {
    for (uint32_t w = 0; w < geometry_.ways; ++w) {
      ways_[std::size_t{s} * geometry_.ways + w].rank = w;
    }
  }
}

void Cache::Touch(uint32_t set, uint32_t way) {
  Way* base = &ways_[std::size_t{set} * geometry_.ways];
  const uint32_t old = base[way].rank;
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    if (base[w].rank < old) ++base[w].rank;
  }
  base[way].rank = 0;
}

Cache::Way* Cache::Lookup(uint64_t addr) {
  const uint64_t tag = addr / geometry_.line_bytes;
  Way* base = &ways_[std::size_t{SetIndex(addr)} * geometry_.ways];
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    if (base[w].valid && base[w].tag == tag) return &base[w];
  }
  return nullptr;
}

bool Cache::Access(uint64_t addr) {
  const uint32_t set = SetIndex(addr);
  Way* base = &ways_[std::size_t{set} * geometry_.ways];
  if (Way* hit = Lookup(addr)) {
    Touch(set, static_cast<uint32_t>(hit - base));
    return true;
  }
  uint32_t victim = 0;
  uint32_t worst = 0;
  bool found_invalid = false;
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    if (!base[w].valid) {
      if (!found_invalid || base[w].rank > worst) {
        victim = w;
        worst = base[w].rank;
      }
      found_invalid = true;
    } else if (!found_invalid && base[w].rank >= worst) {
      victim = w;
      worst = base[w].rank;
    }
  }
  base[victim].valid = true;
  base[victim].tag = addr / geometry_.line_bytes;
  Touch(set, victim);
  return false;
}

void Cache::Flush(uint64_t addr) {
  Way* way = Lookup(addr);
  if (way == nullptr) return;
  way->valid = false;
  // The freed way becomes the next victim.
  const uint32_t set = SetIndex(addr);
  Way* base = &ways_[std::size_t{set} * geometry_.ways];
  const uint32_t old = way->rank;
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    if (base[w].rank > old) --base[w].rank;
  }
  way->rank = geometry_.ways - 1;
}

bool Cache::Contains(uint64_t addr) const {
  return const_cast<Cache*>(this)->Lookup(addr) != nullptr;
}

std::vector<uint32_t> Cache::Ranks(uint32_t set) const {
  std::vector<uint32_t> out;
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    out.push_back(ways_.at(std::size_t{set} * geometry_.ways + w).rank);
  }
  return out;
}

std::size_t Cache::ValidLines(uint32_t set) const {
  std::size_t n = 0;
  for (uint32_t w = 0; w < geometry_.ways; ++w) {
    n += ways_.at(std::size_t{set} * geometry_.ways + w).valid ? 1 : 0;
  }
  return n;
}

void Predictor::Update(uint32_t pc, bool taken) {
  if (pc >= table_.size()) table_.resize(pc + 1, kUnseen);
  uint8_t c = Counter(pc);
  if (taken && c < 3) ++c;
  if (!taken && c > 0) --c;
  table_[pc] = c;
}

uint8_t Memory::Read(uint64_t addr) const {
  const uint64_t page = addr / kPageBytes;
  if (page != last_page_) {
    auto it = pages_.find(page);
    if (it == pages_.end()) return 0;
    last_page_ = page;
    last_ = const_cast<Page*>(&it->second);
  }
  return (*last_)[addr % kPageBytes];
}

void Memory::Write(uint64_t addr, uint8_t value) {
  const uint64_t page = addr / kPageBytes;
  if (page != last_page_) {
    auto [it, inserted] = pages_.try_emplace(page);
    if (inserted) it->second.fill(0);
    last_page_ = page;
    last_ = &it->second;
  }
  (*last_)[addr % kPageBytes] = value;
}

void Memory::Unmap(uint64_t begin, uint64_t end) {
  for (uint64_t a = begin; a < end; ++a) {
    if (Mapped(a)) Write(a, 0);
  }
}

bool operator==(const Memory& a, const Memory& b) {
  auto covered = [](const Memory& x, const Memory& y) {
    for (const auto& [page, bytes] : x.pages_) {
      auto it = y.pages_.find(page);
      if (it == y.pages_.end()) {
        if (std::any_of(bytes.begin(), bytes.end(),
                        [](uint8_t v) { return v != 0; })) {
          return false;
        }
      } else if (it->second != bytes) {
        return false;
      }
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

MachineState::MachineState(const SimConfig& config)
    : cache(config.cache),
      predictor(config.predictor_initial),
      transient_budget(config.transient_window),
      window(config.transient_window) {}

std::string ExecutionLog::ToJsonLines() const {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["pc"] = r.pc;
    j["kind"] = isa::KindName(r.kind);
    if (r.handler) j["handler"] = true;
    j["mode"] = ModeName(r.mode);
    j["status"] = r.squashed ? "squashed" : "retired";
    j["cycle"] = r.cycle;
    auto events = nlohmann::ordered_json::array();
    for (const auto& [name, n] : r.events) events.push_back({name, n});
    j["events"] = std::move(events);
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

void SyncMode(MachineState& st) {
  if (st.regions.empty()) {
    st.mode = Mode::kArchitectural;
    st.transient_budget = st.window;
  } else {
    st.mode = Mode::kTransient;
    st.transient_budget = st.regions.back().budget;
  }
}

void PushRegion(MachineState& st, Region region) {
  if (st.regions.size() >= 2) {
    throw InvariantViolation("transient regions nest at most two deep");
  }
  region.undo_mark = st.undo.size();
  st.regions.push_back(std::move(region));
  SyncMode(st);
}

// Pops the innermost region and restores what it saved.
Region Restore(MachineState& st) {
  Region r = std::move(st.regions.back());
  st.regions.pop_back();
  while (st.undo.size() > r.undo_mark) {
    const auto [addr, old] = st.undo.back();
    st.undo.pop_back();
    st.mem.Write(addr, old);
  }
  st.arch = r.saved;
  if (st.regions.empty()) st.undo.clear();
  SyncMode(st);
  return r;
}

// The exception stub a signal handler runs between the fault and the resume
// point. Twelve operations, no registers, no flags.
const isa::Program& HandlerStub() {
  static const isa::Program stub = [] {
    isa::InstructionSet builtins;
    return isa::Assemble(
        "fence\n"
        "nop\nnop\nnop\nnop\nnop\nnop\nnop\nnop\nnop\n"
        "jmp handler_exit\n"
        "handler_exit: nop\n",
        builtins);
  }();
  return stub;
}

template <bool kLog>
class Executor {
 public:
  Executor(const isa::Program& program, MachineState& st,
           pmu::CounterFile& pmu, const SimConfig& config,
           SuppressionMode suppression, RunResult& out)
      : program_(program),
        st_(st),
        pmu_(pmu),
        config_(config),
        suppression_(suppression),
        out_(out) {
    if (program_.recovery_point.size() != program_.size()) {
      throw InvariantViolation("program has no recovery points");
    }
  }

  void Run() {
    const uint32_t n = static_cast<uint32_t>(program_.size());
    while (true) {
      if (st_.arch.pc >= n) {
        if (st_.regions.empty()) break;
        EndInnermost();
        continue;
      }
      if (st_.cycle > config_.cycle_cap) {
        throw BudgetExhausted("cycle cap of " +
                              std::to_string(config_.cycle_cap) + " exceeded");
      }
      Step(program_.code[st_.arch.pc]);
    }
  }

 private:
  void Emit(StructuralKind kind, uint32_t n, bool transient) {
    pmu_.OnStructural(kind, n, transient);
    if constexpr (kLog) {
      if (!out_.log.records.empty()) {
        out_.log.records.back().events.emplace_back(pmu::StructuralName(kind), n);
      }
    }
  }

  void EmitClass(isa::ClassIndex cls, bool transient) {
    pmu_.OnInstruction(cls, transient);
    if constexpr (kLog) {
      if (out_.log.records.empty()) return;
      const auto& catalog = pmu_.platform().catalog();
      for (const auto& hit : pmu_.platform().HitsFor(cls)) {
        out_.log.records.back().events.emplace_back(catalog.at(hit.event).name,
                                                    hit.increment);
      }
    }
  }

  void BeginRecord(uint32_t pc, Kind kind, bool transient, bool handler) {
    if constexpr (kLog) {
      LogRecord r;
      r.pc = pc;
      r.kind = kind;
      r.handler = handler;
      r.mode = transient ? Mode::kTransient : Mode::kArchitectural;
      r.cycle = st_.cycle;
      out_.log.records.push_back(std::move(r));
    }
  }

  // Data-side cache access shared by loads and stores.
  uint32_t TouchData(uint64_t addr, bool transient) {
    if (st_.cache.Access(addr)) {
      Emit(StructuralKind::kL1dHit, 1, transient);
      return 0;
    }
    Emit(StructuralKind::kL1dMiss, 1, transient);
    Emit(StructuralKind::kResourceStallCycles, config_.miss_penalty, transient);
    return config_.miss_penalty;
  }

  bool Faults(uint64_t addr, bool transient) const {
    return !transient && st_.tee_protection && st_.secret_region.Contains(addr);
  }

  void OpenFault(uint32_t pc) {
    ++out_.stats.faults;
    Region r;
    r.kind = RegionKind::kFault;
    r.saved = st_.arch;
    r.resume_pc = program_.recovery_point[pc];
    r.budget = st_.window;
    r.log_mark = out_.log.records.empty() ? 0 : out_.log.records.size() - 1;
    if constexpr (kLog) {
      if (!out_.log.records.empty()) {
        out_.log.records.back().mode = Mode::kTransient;
      }
    }
    PushRegion(st_, std::move(r));
  }

  void Step(const isa::Instruction& in) {
    const uint32_t pc = st_.arch.pc;
    bool transient = !st_.regions.empty();
    // Serializing or privileged operations end transient issue.
    if (transient && (in.kind == Kind::kFence || in.privileged)) {
      EndInnermost();
      return;
    }
    const std::size_t depth_before = st_.regions.size();
    BeginRecord(pc, in.kind, transient, false);

    uint64_t latency = in.latency;
    uint32_t next = pc + 1;
    auto& regs = st_.arch.regs;
    const auto& ops = in.ops;
    bool squash_now = false;

    switch (in.kind) {
      case Kind::kNop:
      case Kind::kTrigger:
        if (in.privileged && !transient) {
          // Executing a privileged class in user mode faults like a
          // protected load, with nothing to forward.
          OpenFault(pc);
          transient = true;
          squash_now = true;
          break;
        }
        EmitClass(in.cls, transient);
        break;
      case Kind::kMovImm:
        regs[ops.reg_a] = static_cast<uint64_t>(ops.imm);
        break;
      case Kind::kCmpReg:
        st_.arch.zf = regs[ops.reg_a] == regs[ops.reg_b];
        break;
      case Kind::kLoadIndirect: {
        const uint64_t addr = regs[ops.reg_b];
        if (Faults(addr, transient)) {
          OpenFault(pc);
          transient = true;
          if (!st_.secret_mapped) {
            squash_now = true;
          } else {
            regs[ops.reg_a] =
                config_.forward == ForwardMode::kSecret ? st_.mem.Read(addr) : 0;
          }
        } else {
          regs[ops.reg_a] = st_.mem.Read(addr);
        }
        Emit(StructuralKind::kLoad, 1, transient);
        latency += TouchData(addr, transient);
        break;
      }
      case Kind::kStore: {
        const uint64_t addr = regs[ops.reg_a];
        if (Faults(addr, transient)) {
          OpenFault(pc);
          transient = true;
          squash_now = true;
        } else {
          if (transient) st_.undo.emplace_back(addr, st_.mem.Read(addr));
          st_.mem.Write(addr, static_cast<uint8_t>(regs[ops.reg_b]));
        }
        Emit(StructuralKind::kStore, 1, transient);
        latency += TouchData(addr, transient);
        break;
      }
      case Kind::kClflush:
        st_.cache.Flush(regs[ops.reg_a]);
        Emit(StructuralKind::kClflush, 1, transient);
        break;
      case Kind::kFence:
        Emit(StructuralKind::kFence, 1, transient);
        break;
      case Kind::kReadPmu: {
        const int slot = static_cast<int>(ops.imm);
        uint64_t value = 0;
        if (transient) {
          // A transient read sees the raw counter and leaves no trace.
          if (slot >= 0 && slot < pmu_.slot_count()) value = pmu_.Peek(slot);
        } else {
          const auto status = pmu_.TryRead(slot, &value);
          out_.reads.push_back(
              {pc, static_cast<uint8_t>(slot), value, status});
        }
        regs[ops.reg_a] = value;
        break;
      }
      case Kind::kJmp:
        Emit(StructuralKind::kBranch, 1, transient);
        next = ops.indirect ? static_cast<uint32_t>(std::min<uint64_t>(
                                  regs[ops.reg_a], UINT32_MAX))
                            : static_cast<uint32_t>(ops.imm);
        break;
      case Kind::kJcc: {
        const bool taken = (in.cond == isa::Condition::kEqual) == st_.arch.zf;
        const uint32_t target = static_cast<uint32_t>(ops.imm);
        Emit(StructuralKind::kBranch, 1, transient);
        Emit(StructuralKind::kCondBranch, 1, transient);
        const bool in_wrong_path = transient &&
                                   st_.regions.back().kind == RegionKind::kWrongPath;
        if (in_wrong_path) {
          // No nested resolution: the front end keeps following predictions.
          const bool predicted = st_.predictor.Predict(pc);
          Emit(predicted ? StructuralKind::kCondTaken
                         : StructuralKind::kCondNotTaken,
               1, transient);
          next = predicted ? target : pc + 1;
          break;
        }
        Emit(taken ? StructuralKind::kCondTaken : StructuralKind::kCondNotTaken,
             1, transient);
        const uint32_t actual = taken ? target : pc + 1;
        const bool predicted = st_.predictor.Predict(pc);
        if (predicted == taken) {
          st_.predictor.Update(pc, taken);
          next = actual;
          break;
        }
        ++out_.stats.mispredicts;
        if (config_.branch_resolve_delay == 0 || st_.regions.size() >= 2) {
          Resolve(pc, taken, transient);
          next = actual;
          break;
        }
        Region r;
        r.kind = RegionKind::kWrongPath;
        r.saved = st_.arch;
        r.saved.pc = actual;
        r.resume_pc = actual;
        r.budget = config_.branch_resolve_delay;
        r.branch_pc = pc;
        r.branch_taken = taken;
        r.opened_transient = transient;
        r.log_mark = out_.log.records.size();
        // This op's counters go out in the branch's own mode.
        Finish(latency, transient);
        st_.arch.pc = actual;
        if (Charge(depth_before)) return;
        PushRegion(st_, std::move(r));
        st_.arch.pc = predicted ? target : pc + 1;
        return;
      }
    }

    Finish(latency, transient);
    st_.arch.pc = next;

    if (squash_now) {
      EndInnermost();
      return;
    }
    Charge(depth_before);
  }

  // Charges the op to every region open when it issued and closes the
  // outermost exhausted one. An outer region closing takes any inner one with
  // it, unresolved. Returns true if a region closed.
  bool Charge(std::size_t depth_before) {
    std::size_t exhausted = SIZE_MAX;
    for (std::size_t i = 0; i < depth_before && i < st_.regions.size(); ++i) {
      auto& region = st_.regions[i];
      if (region.budget > 0) --region.budget;
      if (region.budget == 0 && exhausted == SIZE_MAX) exhausted = i;
    }
    SyncMode(st_);
    if (exhausted == SIZE_MAX) return false;
    while (st_.regions.size() > exhausted + 1) Restore(st_);
    EndInnermost();
    return true;
  }

  void Finish(uint64_t latency, bool transient) {
    Emit(StructuralKind::kFetchTagHit, 1, transient);
    Emit(StructuralKind::kUopIssued, 1, transient);
    Emit(StructuralKind::kInstruction, 1, transient);
    Emit(StructuralKind::kCycles, static_cast<uint32_t>(latency), transient);
    st_.cycle += latency;
    if (transient) {
      ++out_.stats.squashed;
    } else {
      ++out_.stats.retired;
      if (pmu_.policy() == pmu::Policy::kRenamed) pmu_.OnRetire();
    }
  }

  // Branch resolution: counters in the branch's own mode, then training.
  void Resolve(uint32_t branch_pc, bool taken, bool transient) {
    Emit(StructuralKind::kBranchMispredict, 1, transient);
    Emit(StructuralKind::kCondMispredict, 1, transient);
    Emit(StructuralKind::kResteerCycles, config_.resteer_cycles, transient);
    Emit(StructuralKind::kFetchTagStall, config_.resteer_cycles, transient);
    st_.cycle += config_.resteer_cycles;
    st_.predictor.Update(branch_pc, taken);
  }

  void SquashAccounting(const Region& r) {
    Emit(StructuralKind::kRecoveryCycles, config_.recovery_cycles, true);
    if (r.kind == RegionKind::kFault) {
      Emit(StructuralKind::kMachineClear, 1, true);
    }
    pmu_.OnSquash();
    st_.cycle += config_.recovery_cycles;
    ++out_.stats.squashes;
    if constexpr (kLog) {
      auto& recs = out_.log.records;
      for (std::size_t i = r.log_mark; i < recs.size(); ++i) {
        if (recs[i].mode == Mode::kTransient) recs[i].squashed = true;
      }
    }
  }

  void EndInnermost() {
    const RegionKind kind = st_.regions.back().kind;
    if (kind == RegionKind::kWrongPath) {
      const Region& top = st_.regions.back();
      const uint32_t bpc = top.branch_pc;
      const bool taken = top.branch_taken;
      const bool opened_transient = top.opened_transient;
      Region r = Restore(st_);
      SquashAccounting(r);
      Resolve(bpc, taken, opened_transient);
      return;
    }
    Region r = Restore(st_);
    SquashAccounting(r);
    st_.arch.pc = r.resume_pc;
    if (suppression_ == SuppressionMode::kSoftwareHandler) RunHandler();
  }

  void RunHandler() {
    ++out_.stats.handler_calls;
    st_.cycle += config_.handler_entry_cycles;
    const auto& stub = HandlerStub();
    uint32_t pc = 0;
    while (pc < stub.size()) {
      const auto& in = stub.code[pc];
      BeginRecord(pc, in.kind, false, true);
      uint32_t next = pc + 1;
      if (in.kind == Kind::kFence) Emit(StructuralKind::kFence, 1, false);
      if (in.kind == Kind::kJmp) {
        Emit(StructuralKind::kBranch, 1, false);
        next = static_cast<uint32_t>(in.ops.imm);
      }
      Finish(in.latency, false);
      pc = next;
    }
  }

  const isa::Program& program_;
  MachineState& st_;
  pmu::CounterFile& pmu_;
  const SimConfig& config_;
  SuppressionMode suppression_;
  RunResult& out_;
};

}  // namespace

RunResult Simulator::Run(const isa::Program& program, MachineState& state,
                         pmu::CounterFile& counters,
                         SuppressionMode suppression,
                         RunOptions options) const {
  RunResult out;
  state.window = config_.transient_window;
  SyncMode(state);
  if (options.record_log) {
    Executor<true>(program, state, counters, config_, suppression, out).Run();
  } else {
    Executor<false>(program, state, counters, config_, suppression, out).Run();
  }
  return out;
}

void EnterTransient(MachineState& state, RegionKind kind, uint32_t resume_pc,
                    uint32_t budget) {
  Region r;
  r.kind = kind;
  r.saved = state.arch;
  r.resume_pc = resume_pc;
  r.budget = budget;
  r.opened_transient = !state.regions.empty();
  if (kind == RegionKind::kWrongPath) r.saved.pc = resume_pc;
  PushRegion(state, std::move(r));
}

void Squash(MachineState& state, pmu::CounterFile* counters,
            const SimConfig& config) {
  if (state.regions.empty()) {
    throw IllegalSquash("squash requested in ARCHITECTURAL mode");
  }
  Region r = Restore(state);
  state.cycle += config.recovery_cycles;
  if (counters != nullptr) {
    counters->OnStructural(StructuralKind::kRecoveryCycles,
                           config.recovery_cycles, true);
    counters->OnSquash();
  }
  if (r.kind == RegionKind::kFault) state.arch.pc = r.resume_pc;
}

}  // namespace pmuspill::sim
