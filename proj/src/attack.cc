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

#include "pmuspill/attack.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "pmuspill/errors.h"
#include "pmuspill/parallel.h"

namespace pmuspill::attack {

namespace {

isa::ClassIndex ResolveSlotClass(std::string_view id,
                                 const isa::InstructionSet& iset) {
  auto index = iset.Find(id == "nop" ? "uop.nop" : id);
  if (!index) {
    throw InvalidSpec("unknown slot instruction '" + std::string(id) + "'");
  }
  const auto kind = iset.at(*index).kind;
  if (kind != isa::Kind::kNop && kind != isa::Kind::kTrigger) {
    throw InvalidSpec("'" + std::string(id) + "' cannot occupy a gadget slot");
  }
  return *index;
}

std::string SlotLine(isa::ClassIndex cls, const isa::InstructionSet& iset) {
  if (cls == isa::InstructionSet::kNop) return "nop";
  return "trigger " + isa::QuoteId(iset.at(cls).id);
}

std::string Hex(uint64_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}

}  // namespace

void ValidateSpec(const GadgetSpec& spec, const isa::InstructionSet& iset) {
  if (spec.training_rounds < 0) {
    throw InvalidSpec("training_rounds must be non-negative");
  }
  const int d = spec.comparison_domain;
  if (d < 2 || d > 256 || (d & (d - 1)) != 0) {
    throw InvalidSpec("comparison_domain must be a power of two in 2..256");
  }
  if (spec.line_bytes == 0) throw InvalidSpec("line size must be positive");
  const uint64_t eq_line = spec.addr_eq / spec.line_bytes;
  const uint64_t neq_line = spec.addr_neq / spec.line_bytes;
  if (eq_line == neq_line) {
    throw InvalidSpec("addr_eq and addr_neq must be distinct cache lines");
  }
  const uint64_t trainer_line = spec.trainer_addr / spec.line_bytes;
  if (trainer_line == eq_line || trainer_line == neq_line) {
    throw InvalidSpec("trainer address shares a probe cache line");
  }
  if (spec.slots.empty()) throw InvalidSpec("gadget reads no counter slot");
  std::set<int> seen;
  for (int s : spec.slots) {
    if (s < 0 || s > 255 || !seen.insert(s).second) {
      throw InvalidSpec("bad or repeated counter slot " + std::to_string(s));
    }
  }
  ResolveSlotClass(spec.ins1, iset);
  ResolveSlotClass(spec.ins2, iset);
}

std::string RenderGadgetSource(const GadgetSpec& spec,
                               const isa::InstructionSet& iset) {
  ValidateSpec(spec, iset);
  const auto ins1 = ResolveSlotClass(spec.ins1, iset);
  const auto ins2 = ResolveSlotClass(spec.ins2, iset);
  std::ostringstream out;
  out << "# ins1=" << iset.at(ins1).id << " ins2=" << iset.at(ins2).id
      << " training=" << spec.training_rounds
      << " domain=" << spec.comparison_domain << "\n";
  out << "  mov r3, " << Hex(spec.addr_neq) << "\n"
      << "  mov r4, " << Hex(spec.addr_eq) << "\n"
      << "  mov r6, " << Hex(spec.trainer_addr) << "\n"
      << "  jmp start\n";
  // The core block every training and probe call runs.
  out << "core:\n"
      << "  load r1, [r5]\n"
      << "  cmp r1, r2\n"
      << "  je equal\n"
      << "  load r12, [r3]\n"
      << "  " << SlotLine(ins1, iset) << "\n"
      << "  jmp join\n"
      << "equal:\n"
      << "  load r12, [r4]\n"
      << "  " << SlotLine(ins2, iset) << "\n"
      << "  jmp join\n"
      << "join:\n"
      << "  fence\n"
      << "  jmp r9\n"
      << "start:\n";
  const int d = spec.comparison_domain;
  for (int j = 0; j < d; ++j) {
    const std::string v = "v" + std::to_string(j);
    out << v << ":\n"
        << "  clflush [r4]\n"
        << "  load r12, [r3]\n"
        << "  mov r2, " << j << "\n"
        << "  mov r8, " << (j + 1) % d << "\n"
        << "  store [r6], r8\n"
        << "  mov r5, " << Hex(spec.trainer_addr) << "\n";
    for (int t = 0; t < spec.training_rounds; ++t) {
      const std::string back = v + "_t" + std::to_string(t);
      out << "  mov r9, " << back << "\n"
          << "  jmp core\n"
          << back << ":\n";
    }
    out << v << "_s:\n"
        << "  mov r5, " << Hex(spec.secret_addr) << "\n";
    for (int s : spec.slots) out << "  rdpmu r10, " << s << "\n";
    out << "  mov r9, " << v << "_p\n"
        << "  jmp core\n"
        << v << "_p:\n";
    for (int s : spec.slots) out << "  rdpmu r11, " << s << "\n";
  }
  return out.str();
}

Gadget BuildGadget(const GadgetSpec& spec, const isa::InstructionSet& iset) {
  Gadget g;
  g.spec = spec;
  g.program = isa::Assemble(RenderGadgetSource(spec, iset), iset);
  for (int j = 0; j < spec.comparison_domain; ++j) {
    g.secret_movs.push_back(
        g.program.labels.at("v" + std::to_string(j) + "_s"));
  }
  g.ins1_at = g.program.labels.at("core") + 4;
  g.ins2_at = g.program.labels.at("equal") + 1;
  return g;
}

void RetargetSecret(Gadget& gadget, uint64_t secret_addr) {
  gadget.spec.secret_addr = secret_addr;
  for (uint32_t at : gadget.secret_movs) {
    gadget.program.code.at(at).ops.imm = static_cast<int64_t>(secret_addr);
  }
}

void SetSlotClass(Gadget& gadget, const isa::InstructionSet& iset, int slot,
                  isa::ClassIndex cls) {
  if (slot != 1 && slot != 2) throw InvalidSpec("gadget slot must be 1 or 2");
  const auto& c = iset.at(cls);
  ResolveSlotClass(c.id, iset);
  auto& in = gadget.program.code.at(slot == 1 ? gadget.ins1_at : gadget.ins2_at);
  in.cls = cls;
  in.kind = c.kind;
  in.privileged = c.fault == isa::Fault::kPrivileged;
  in.latency = c.latency;
  (slot == 1 ? gadget.spec.ins1 : gadget.spec.ins2) = c.id;
}

std::string DumpTrace(const RecoveryTrace& trace) {
  return nlohmann::json(trace.deltas).dump();
}

Decode DecodeDeltas(std::span<const uint64_t> deltas) {
  std::unordered_map<uint64_t, uint32_t> multiplicity;
  for (uint64_t d : deltas) ++multiplicity[d];
  std::optional<uint64_t> singleton;
  for (const auto& [value, count] : multiplicity) {
    if (count != 1) continue;
    if (singleton) return std::nullopt;
    singleton = value;
  }
  if (!singleton) return std::nullopt;
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    if (deltas[j] == *singleton) return static_cast<uint32_t>(j);
  }
  return std::nullopt;
}

Decode DecodeTrace(const RecoveryTrace& trace) {
  return DecodeDeltas(trace.deltas);
}

Decode MajorityVote(std::span<const Decode> decodes) {
  if (decodes.empty()) throw InvalidSpec("majority vote over no rounds");
  std::map<uint32_t, int> votes;
  for (const auto& d : decodes) {
    if (d) ++votes[*d];
  }
  Decode best;
  int best_count = 0;
  bool tied = false;
  for (const auto& [value, count] : votes) {
    if (count > best_count) {
      best = value;
      best_count = count;
      tied = false;
    } else if (count == best_count) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best;
}

std::string_view FailureName(FailureReason reason) {
  switch (reason) {
    case FailureReason::kNone: return "none";
    case FailureReason::kNoConclusiveRound: return "no_conclusive_round";
    case FailureReason::kNoMajority: return "no_majority";
    case FailureReason::kPmuUnavailable: return "pmu_unavailable";
    case FailureReason::kEventUnavailable: return "event_unavailable";
  }
  return "?";
}

std::vector<LeakOutcome> LeakByteMulti(const Environment& env,
                                       const Gadget& gadget,
                                       std::span<const pmu::EventIndex> events,
                                       int rounds, uint64_t stream) {
  const auto& spec = gadget.spec;
  const std::size_t k_count = events.size();
  const std::size_t s_count = spec.slots.size();
  if (k_count == 0 || k_count > s_count) {
    throw InvalidSpec("need between 1 and " + std::to_string(s_count) +
                      " events for this gadget");
  }
  if (rounds < 1) throw InvalidSpec("rounds must be at least 1");

  sim::MachineState machine = env.NewMachine();
  pmu::CounterFile counters = env.NewCounters(stream);
  std::vector<LeakOutcome> out(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    try {
      counters.Program(spec.slots[k], events[k]);
    } catch (const EventDisabled&) {
      out[k].failure = FailureReason::kEventUnavailable;
    } catch (const UnknownEvent&) {
      out[k].failure = FailureReason::kEventUnavailable;
    }
  }

  const sim::Simulator simulator = env.simulator();
  const auto domain = static_cast<std::size_t>(spec.comparison_domain);
  const uint64_t per_round =
      domain * static_cast<uint64_t>(spec.training_rounds + 1);
  for (int r = 0; r < rounds; ++r) {
    machine.arch = sim::ArchState{};
    const uint64_t start = machine.cycle;
    counters.BeginRun(domain, 2);
    const sim::RunResult result = simulator.Run(
        gadget.program, machine, counters, env.config().suppression);
    const uint64_t cycles = machine.cycle - start;
    if (result.reads.size() != domain * 2 * s_count) {
      throw InvariantViolation("gadget produced " +
                               std::to_string(result.reads.size()) +
                               " counter reads");
    }
    for (std::size_t k = 0; k < k_count; ++k) {
      auto& o = out[k];
      o.core_executions += per_round;
      o.simulated_cycles += cycles;
      RecoveryTrace trace;
      trace.round_index = r;
      trace.slot = spec.slots[k];
      trace.deltas.resize(domain);
      bool readable = true;
      for (std::size_t j = 0; j < domain; ++j) {
        const auto& before = result.reads[j * 2 * s_count + k];
        const auto& after = result.reads[j * 2 * s_count + s_count + k];
        if (before.status != pmu::ReadStatus::kOk ||
            after.status != pmu::ReadStatus::kOk) {
          readable = false;
          break;
        }
        trace.deltas[j] = after.value - before.value;
      }
      if (!readable) {
        if (o.failure == FailureReason::kNone) {
          o.failure = FailureReason::kPmuUnavailable;
        }
        o.round_decodes.push_back(std::nullopt);
        continue;
      }
      o.round_decodes.push_back(DecodeTrace(trace));
      o.traces.push_back(std::move(trace));
    }
  }
  for (auto& o : out) {
    if (o.failure != FailureReason::kNone) continue;
    const bool any = std::any_of(o.round_decodes.begin(), o.round_decodes.end(),
                                 [](const Decode& d) { return d.has_value(); });
    if (!any) {
      o.failure = FailureReason::kNoConclusiveRound;
      continue;
    }
    o.value = MajorityVote(o.round_decodes);
    if (!o.value) o.failure = FailureReason::kNoMajority;
  }
  return out;
}

LeakOutcome LeakByte(const Environment& env, const Gadget& gadget,
                     pmu::EventIndex event, int rounds, uint64_t stream) {
  const pmu::EventIndex events[] = {event};
  return std::move(LeakByteMulti(env, gadget, events, rounds, stream).front());
}

std::vector<LeakOutcome> LeakSecret(
    const Environment& env, const GadgetSpec& spec, pmu::EventIndex event,
    int rounds, std::size_t count, int jobs,
    const std::function<void(std::size_t)>& progress, bool keep_traces) {
  const Gadget base = BuildGadget(spec, env.platform()->iset());
  std::vector<LeakOutcome> out(count);
  std::vector<Gadget> gadgets(std::max(1, jobs), base);
  std::mutex mu;
  std::size_t done = 0;
  ParallelFor(count, jobs, [&](std::size_t i, std::size_t worker) {
    Gadget& g = gadgets[worker];
    RetargetSecret(g, env.SecretAddress(i));
    out[i] = LeakByte(env, g, event, rounds, i);
    // Traces of a long secret add up; the decodes stay.
    if (!keep_traces) out[i].traces.clear();
    if (progress) {
      std::lock_guard<std::mutex> lock(mu);
      progress(++done);
    }
  });
  return out;
}

Metrics MeasureMetrics(std::span<const LeakOutcome> outcomes,
                       std::span<const uint8_t> truth, double clock_hz) {
  Metrics m;
  m.bytes = outcomes.size();
  if (m.bytes == 0) return m;
  double executions = 0;
  double cycles = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    executions += static_cast<double>(o.core_executions);
    cycles += static_cast<double>(o.simulated_cycles);
    if (!o.value) {
      ++m.failures;
    } else if (i >= truth.size() || *o.value != truth[i]) {
      ++m.wrong;
    }
  }
  const auto n = static_cast<double>(m.bytes);
  m.executions_per_byte = executions / n;
  m.cycles_per_byte = cycles / n;
  m.throughput = m.cycles_per_byte > 0 ? clock_hz / m.cycles_per_byte : 0;
  m.error_rate = static_cast<double>(m.failures + m.wrong) / n;
  return m;
}

std::string_view ScenarioName(Scenario s) {
  return s == Scenario::kS1 ? "s1" : "s2";
}

std::optional<Scenario> ParseScenario(std::string_view name) {
  if (name == "s1" || name == "S1") return Scenario::kS1;
  if (name == "s2" || name == "S2") return Scenario::kS2;
  return std::nullopt;
}

std::vector<std::string> SweepReport::VulnerableEvents() const {
  std::vector<std::string> out;
  for (const auto& row : summary) {
    if (row.vulnerable &&
        std::find(out.begin(), out.end(), row.event_name) == out.end()) {
      out.push_back(row.event_name);
    }
  }
  return out;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<std::string> SplitCsvLine(std::string_view line, std::size_t n) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV", n);
  return fields;
}

constexpr std::string_view kCsvHeader =
    "event_name,category,scenario,trigger_count,vulnerable,tested,error_rate";

}  // namespace

std::string SweepReport::ToCsv() const {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : summary) {
    out += CsvField(row.event_name) + ',' + CsvField(row.category) + ',' +
           std::string(ScenarioName(row.scenario)) + ',' +
           std::to_string(row.trigger_count) + ',' +
           (row.vulnerable ? "true" : "false") + ',' +
           std::to_string(row.tested) + ',' + FormatDouble(row.error_rate) +
           '\n';
  }
  return out;
}

std::vector<EventSummary> ReadSummaryCsv(std::string_view csv) {
  std::vector<EventSummary> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header = true;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw ParseError("unexpected CSV header", 1);
      header = false;
      continue;
    }
    auto f = SplitCsvLine(line, line_no);
    if (f.size() != 7) throw ParseError("expected 7 CSV fields", line_no);
    EventSummary row;
    row.event_name = f[0];
    row.category = f[1];
    auto scenario = ParseScenario(f[2]);
    if (!scenario) throw ParseError("bad scenario '" + f[2] + "'", line_no);
    row.scenario = *scenario;
    auto number = [&](const std::string& s, auto& value) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad number '" + s + "'", line_no);
      }
    };
    number(f[3], row.trigger_count);
    if (f[4] != "true" && f[4] != "false") {
      throw ParseError("bad boolean '" + f[4] + "'", line_no);
    }
    row.vulnerable = f[4] == "true";
    number(f[5], row.tested);
    number(f[6], row.error_rate);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string SweepReport::ToJson(const pmu::Platform& platform) const {
  nlohmann::ordered_json j;
  j["reps"] = reps;
  j["gadget_executions"] = gadget_executions;
  j["simulator_runs"] = simulator_runs;
  j["vulnerable_events"] = VulnerableEvents();
  auto rows = nlohmann::ordered_json::array();
  std::map<std::pair<std::string, Scenario>, std::vector<std::string>> triggers;
  for (const auto& cell : cells) {
    if (!cell.trigger) continue;
    triggers[{platform.catalog().at(cell.event).name, cell.scenario}].push_back(
        platform.iset().at(cell.cls).id);
  }
  for (const auto& row : summary) {
    nlohmann::ordered_json r;
    r["event_name"] = row.event_name;
    r["category"] = row.category;
    r["scenario"] = ScenarioName(row.scenario);
    r["tested"] = row.tested;
    r["trigger_count"] = row.trigger_count;
    r["error_rate"] = row.error_rate;
    r["vulnerable"] = row.vulnerable;
    auto it = triggers.find({row.event_name, row.scenario});
    r["trigger_instructions"] =
        it == triggers.end() ? std::vector<std::string>{} : it->second;
    rows.push_back(std::move(r));
  }
  j["events"] = std::move(rows);
  return j.dump(2) + "\n";
}

SweepReport Sweep(std::shared_ptr<const pmu::Platform> platform,
                  const SweepConfig& config) {
  if (config.reps < 1) throw ConfigError("reps must be at least 1");
  if (config.scenarios.empty()) throw ConfigError("no sweep scenario selected");
  std::vector<pmu::EventIndex> events = config.events;
  if (events.empty()) {
    for (pmu::EventIndex e = 0; e < platform->catalog().size(); ++e) {
      events.push_back(e);
    }
  }
  std::vector<isa::ClassIndex> classes = config.instructions;
  if (classes.empty()) classes = platform->iset().Ingested();

  Environment env(platform, config.env);
  env.ApplyPolicy(config.policy);
  const uint8_t secret[] = {config.secret};
  env.PlantSecret(secret);

  const int width =
      std::max(1, std::min(config.events_per_run, config.env.slots));
  GadgetSpec spec;
  spec.secret_addr = env.SecretAddress(0);
  spec.slots.clear();
  for (int s = 0; s < width; ++s) spec.slots.push_back(s);
  const Gadget base = BuildGadget(spec, platform->iset());

  const std::size_t n_events = events.size();
  const std::size_t n_scen = config.scenarios.size();
  const std::size_t n_cls = classes.size();
  SweepReport report;
  report.reps = config.reps;
  report.cells.resize(n_events * n_scen * n_cls);

  const std::size_t chunks = (n_events + width - 1) / width;
  const std::size_t items = n_scen * n_cls;
  const int jobs = std::max(1, config.jobs);
  std::vector<Gadget> gadgets(jobs, base);
  std::mutex mu;
  std::size_t done = 0;
  ParallelFor(items, jobs, [&](std::size_t item, std::size_t worker) {
    const std::size_t s = item / n_cls;
    const std::size_t c = item % n_cls;
    const Scenario scenario = config.scenarios[s];
    Gadget& g = gadgets[worker];
    SetSlotClass(g, platform->iset(), 1,
                 scenario == Scenario::kS1 ? classes[c]
                                           : isa::InstructionSet::kNop);
    SetSlotClass(g, platform->iset(), 2,
                 scenario == Scenario::kS2 ? classes[c]
                                           : isa::InstructionSet::kNop);
    for (std::size_t ch = 0; ch < chunks; ++ch) {
      const std::size_t first = ch * width;
      const std::size_t last = std::min(n_events, first + width);
      std::span<const pmu::EventIndex> chunk(events.data() + first,
                                             last - first);
      const uint64_t stream =
          SplitMix64((uint64_t{static_cast<uint8_t>(scenario)} << 56) ^
                     (uint64_t{classes[c]} << 24) ^ ch);
      auto outcomes = LeakByteMulti(env, g, chunk, config.reps, stream);
      for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const std::size_t e = first + k;
        auto& cell = report.cells[(e * n_scen + s) * n_cls + c];
        const auto& o = outcomes[k];
        cell.event = events[e];
        cell.scenario = scenario;
        cell.cls = classes[c];
        cell.decoded = o.value;
        cell.failure = o.failure;
        cell.trigger = o.value && *o.value == config.secret;
        for (const auto& d : o.round_decodes) {
          if (!d || *d != config.secret) ++cell.round_errors;
        }
      }
    }
    if (config.progress) {
      std::lock_guard<std::mutex> lock(mu);
      config.progress(++done, items);
    }
  });

  report.gadget_executions =
      static_cast<uint64_t>(report.cells.size()) * config.reps;
  report.simulator_runs =
      static_cast<uint64_t>(items) * chunks * config.reps;
  for (std::size_t e = 0; e < n_events; ++e) {
    const auto& def = platform->catalog().at(events[e]);
    for (std::size_t s = 0; s < n_scen; ++s) {
      EventSummary row;
      row.event_name = def.name;
      row.category = def.category;
      row.scenario = config.scenarios[s];
      row.tested = n_cls;
      uint64_t errors = 0;
      for (std::size_t c = 0; c < n_cls; ++c) {
        const auto& cell = report.cells[(e * n_scen + s) * n_cls + c];
        if (!cell.trigger) continue;
        ++row.trigger_count;
        errors += cell.round_errors;
      }
      row.vulnerable = row.trigger_count > 0;
      row.error_rate =
          row.trigger_count == 0
              ? 0.0
              : static_cast<double>(errors) /
                    static_cast<double>(row.trigger_count * config.reps);
      report.summary.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace pmuspill::attack
