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

#include "pmuspill/isa.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "pmuspill/errors.h"

namespace pmuspill::isa {

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kLoadIndirect: return "LOAD_INDIRECT";
    case Kind::kStore: return "STORE";
    case Kind::kMovImm: return "MOV_IMM";
    case Kind::kCmpReg: return "CMP_REG";
    case Kind::kJcc: return "JCC";
    case Kind::kJmp: return "JMP";
    case Kind::kNop: return "NOP";
    case Kind::kClflush: return "CLFLUSH";
    case Kind::kFence: return "FENCE";
    case Kind::kReadPmu: return "READ_PMU";
    case Kind::kTrigger: return "TRIGGER";
  }
  return "?";
}

void Validate(const InstrClass& cls) {
  if (cls.id.empty()) throw InvalidInstrClass("instruction class with empty id");
  if (cls.latency == 0) {
    throw InvalidInstrClass(cls.id + ": latency must be positive");
  }
  if (cls.kind == Kind::kTrigger && cls.signature.empty()) {
    throw InvalidInstrClass(cls.id + ": TRIGGER class needs a signature");
  }
  if (cls.kind == Kind::kNop && !cls.signature.empty()) {
    throw InvalidInstrClass(cls.id + ": NOP class must be event-silent");
  }
  for (const auto& entry : cls.signature) {
    if (entry.increment == 0) {
      throw InvalidInstrClass(cls.id + ": zero increment for " + entry.event);
    }
  }
}

namespace {

struct Builtin {
  const char* id;
  const char* mnemonic;
  Kind kind;
  uint32_t latency;
};

// Order must match the InstructionSet::k* constants.
constexpr Builtin kBuiltins[] = {
    {"uop.nop", "nop", Kind::kNop, 1},
    {"uop.mov", "mov", Kind::kMovImm, 1},
    {"uop.load", "load", Kind::kLoadIndirect, 4},
    {"uop.store", "store", Kind::kStore, 1},
    {"uop.cmp", "cmp", Kind::kCmpReg, 1},
    {"uop.je", "je", Kind::kJcc, 1},
    {"uop.jne", "jne", Kind::kJcc, 1},
    {"uop.jmp", "jmp", Kind::kJmp, 1},
    {"uop.clflush", "clflush", Kind::kClflush, 2},
    {"uop.fence", "fence", Kind::kFence, 4},
    {"uop.rdpmu", "rdpmu", Kind::kReadPmu, 30},
};

}  // namespace

InstructionSet::InstructionSet() {
  for (const auto& b : kBuiltins) {
    InstrClass cls;
    cls.id = b.id;
    cls.mnemonic = b.mnemonic;
    cls.kind = b.kind;
    cls.latency = b.latency;
    cls.provenance = "builtin";
    Add(std::move(cls));
  }
}

ClassIndex InstructionSet::Add(InstrClass cls) {
  Validate(cls);
  if (by_id_.contains(cls.id)) {
    throw InvalidInstrClass("duplicate instruction class id: " + cls.id);
  }
  const auto index = static_cast<ClassIndex>(classes_.size());
  by_id_.emplace(cls.id, index);
  classes_.push_back(std::move(cls));
  return index;
}

std::optional<ClassIndex> InstructionSet::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<ClassIndex> InstructionSet::Ingested() const {
  std::vector<ClassIndex> out;
  out.reserve(ingested_count());
  for (ClassIndex i = kBuiltinCount; i < classes_.size(); ++i) out.push_back(i);
  return out;
}

void Program::ComputeRecoveryPoints() {
  recovery_point.assign(code.size(), static_cast<uint32_t>(code.size()));
  auto next = static_cast<uint32_t>(code.size());
  for (std::size_t i = code.size(); i-- > 0;) {
    if (code[i].kind == Kind::kFence) next = static_cast<uint32_t>(i + 1);
    recovery_point[i] = next;
  }
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_' && head != '.') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '.' || u == '$';
  });
}

// Strips a trailing '#' comment that is not inside a quoted operand.
std::string_view StripComment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::vector<std::string_view> SplitOperands(std::string_view s) {
  std::vector<std::string_view> out;
  if (Trim(s).empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

struct PendingLabel {
  std::size_t instr;
  std::size_t line;
};

class Parser {
 public:
  explicit Parser(const InstructionSet& iset) : iset_(iset) {}

  Program Parse(std::string_view source) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
      std::size_t end = source.find('\n', pos);
      if (end == std::string_view::npos) end = source.size();
      ++line_no;
      ParseLine(source.substr(pos, end - pos), line_no);
      pos = end + 1;
    }
    for (const auto& [index, line] : pending_) {
      auto& ops = program_.code[index].ops;
      auto it = program_.labels.find(ops.label);
      if (it == program_.labels.end()) {
        throw SyntaxError(line, "unresolved label '" + ops.label + "'");
      }
      ops.imm = it->second;
    }
    program_.ComputeRecoveryPoints();
    return std::move(program_);
  }

 private:
  void ParseLine(std::string_view raw, std::size_t line) {
    std::string_view text = Trim(StripComment(raw));
    if (text.empty()) return;
    // Leading "label:" (possibly followed by an instruction).
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
      std::string_view head = Trim(text.substr(0, colon));
      if (IsIdentifier(head) && !MaybeRegister(head) &&
          text.substr(0, colon).find('"') == std::string_view::npos) {
        std::string name(head);
        if (program_.labels.contains(name)) {
          throw SyntaxError(line, "duplicate label '" + name + "'");
        }
        program_.labels.emplace(std::move(name),
                                static_cast<uint32_t>(program_.code.size()));
        text = Trim(text.substr(colon + 1));
        if (text.empty()) return;
      }
    }
    std::size_t split = 0;
    while (split < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[split]))) {
      ++split;
    }
    std::string mnemonic(text.substr(0, split));
    std::transform(mnemonic.begin(), mnemonic.end(), mnemonic.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    std::string_view rest = Trim(text.substr(split));
    program_.code.push_back(ParseInstruction(mnemonic, rest, line));
  }

  Instruction ParseInstruction(const std::string& mnemonic,
                               std::string_view rest, std::size_t line) {
    Instruction in;
    if (mnemonic == "trigger") return ParseTrigger(rest, line);
    auto ops = SplitOperands(rest);
    auto arity = [&](std::size_t n) {
      if (ops.size() != n) {
        throw SyntaxError(line, mnemonic + " expects " + std::to_string(n) +
                                    " operand(s), got " +
                                    std::to_string(ops.size()));
      }
    };
    if (mnemonic == "nop") {
      arity(0);
      Set(in, InstructionSet::kNop);
    } else if (mnemonic == "fence") {
      arity(0);
      Set(in, InstructionSet::kFence);
    } else if (mnemonic == "mov") {
      arity(2);
      Set(in, InstructionSet::kMov);
      in.ops.reg_a = Register(ops[0], line);
      if (auto imm = Immediate(ops[1])) {
        in.ops.imm = *imm;
      } else {
        LabelRef(in, ops[1], line);
      }
    } else if (mnemonic == "load") {
      arity(2);
      Set(in, InstructionSet::kLoad);
      in.ops.reg_a = Register(ops[0], line);
      in.ops.reg_b = Memory(ops[1], line);
    } else if (mnemonic == "store") {
      arity(2);
      Set(in, InstructionSet::kStore);
      in.ops.reg_a = Memory(ops[0], line);
      in.ops.reg_b = Register(ops[1], line);
    } else if (mnemonic == "cmp") {
      arity(2);
      Set(in, InstructionSet::kCmp);
      in.ops.reg_a = Register(ops[0], line);
      in.ops.reg_b = Register(ops[1], line);
    } else if (mnemonic == "je" || mnemonic == "jne") {
      arity(1);
      Set(in, mnemonic == "je" ? InstructionSet::kJe : InstructionSet::kJne);
      in.cond = mnemonic == "je" ? Condition::kEqual : Condition::kNotEqual;
      LabelRef(in, ops[0], line);
    } else if (mnemonic == "jmp") {
      arity(1);
      Set(in, InstructionSet::kJmp);
      if (auto reg = MaybeRegister(ops[0])) {
        in.ops.indirect = true;
        in.ops.reg_a = *reg;
      } else {
        LabelRef(in, ops[0], line);
      }
    } else if (mnemonic == "clflush") {
      arity(1);
      Set(in, InstructionSet::kClflush);
      in.ops.reg_a = Memory(ops[0], line);
    } else if (mnemonic == "rdpmu") {
      arity(2);
      Set(in, InstructionSet::kReadPmu);
      in.ops.reg_a = Register(ops[0], line);
      auto slot = Immediate(ops[1]);
      if (!slot || *slot < 0 || *slot > 255) {
        throw SyntaxError(line, "rdpmu expects a counter slot number");
      }
      in.ops.imm = *slot;
    } else {
      throw SyntaxError(line, "unknown mnemonic '" + mnemonic + "'");
    }
    return in;
  }

  Instruction ParseTrigger(std::string_view rest, std::size_t line) {
    std::string id;
    if (!rest.empty() && rest.front() == '"') {
      std::size_t i = 1;
      for (; i < rest.size() && rest[i] != '"'; ++i) {
        if (rest[i] == '\\' && i + 1 < rest.size()) ++i;
        id.push_back(rest[i]);
      }
      if (i >= rest.size()) throw SyntaxError(line, "unterminated quoted id");
      if (!Trim(rest.substr(i + 1)).empty()) {
        throw SyntaxError(line, "trigger expects 1 operand");
      }
    } else {
      if (rest.empty() || rest.find(',') != std::string_view::npos ||
          rest.find_first_of(" \t") != std::string_view::npos) {
        throw SyntaxError(line, "trigger expects 1 operand");
      }
      id = std::string(rest);
    }
    auto index = iset_.Find(id);
    if (!index) throw SyntaxError(line, "unknown instruction class '" + id + "'");
    const auto& cls = iset_.at(*index);
    if (cls.kind != Kind::kTrigger && cls.kind != Kind::kNop) {
      throw SyntaxError(line, "class '" + id + "' is not a trigger slot class");
    }
    Instruction in;
    Set(in, *index);
    return in;
  }

  void Set(Instruction& in, ClassIndex cls) const {
    const auto& c = iset_.at(cls);
    in.cls = cls;
    in.kind = c.kind;
    in.privileged = c.fault == Fault::kPrivileged;
    in.latency = c.latency;
  }

  void LabelRef(Instruction& in, std::string_view name, std::size_t line) {
    if (!IsIdentifier(name) || MaybeRegister(name)) {
      throw SyntaxError(line, "bad label '" + std::string(name) + "'");
    }
    in.ops.label = std::string(name);
    pending_.push_back({program_.code.size(), line});
  }

  static std::optional<uint8_t> MaybeRegister(std::string_view s) {
    if (s.size() < 2 || (s[0] != 'r' && s[0] != 'R')) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    if (value < 0 || value >= kNumRegisters) return std::nullopt;
    return static_cast<uint8_t>(value);
  }

  static uint8_t Register(std::string_view s, std::size_t line) {
    auto reg = MaybeRegister(s);
    if (!reg) throw SyntaxError(line, "bad register '" + std::string(s) + "'");
    return *reg;
  }

  static uint8_t Memory(std::string_view s, std::size_t line) {
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') {
      throw SyntaxError(line, "expected [reg], got '" + std::string(s) + "'");
    }
    return Register(Trim(s.substr(1, s.size() - 2)), line);
  }

  static std::optional<int64_t> Immediate(std::string_view s) {
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
      negative = true;
      s.remove_prefix(1);
    }
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      base = 16;
      s.remove_prefix(2);
    }
    if (s.empty()) return std::nullopt;
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    auto signed_value = static_cast<int64_t>(value);
    return negative ? -signed_value : signed_value;
  }

  const InstructionSet& iset_;
  Program program_;
  std::vector<PendingLabel> pending_;
};

std::string Reg(uint8_t r) { return "r" + std::to_string(r); }

}  // namespace

Program Assemble(std::string_view source, const InstructionSet& iset) {
  return Parser(iset).Parse(source);
}

std::string QuoteId(std::string_view id) {
  if (IsIdentifier(id)) return std::string(id);
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Render(const Program& program, const InstructionSet& iset) {
  std::multimap<uint32_t, std::string> labels_at;
  for (const auto& [name, index] : program.labels) labels_at.emplace(index, name);

  std::ostringstream out;
  auto emit_labels = [&](uint32_t index) {
    auto [lo, hi] = labels_at.equal_range(index);
    for (auto it = lo; it != hi; ++it) out << it->second << ":\n";
  };
  for (uint32_t i = 0; i < program.code.size(); ++i) {
    emit_labels(i);
    const auto& in = program.code[i];
    const auto& ops = in.ops;
    const auto& cls = iset.at(in.cls);
    out << "  ";
    auto target = [&] {
      return ops.label.empty() ? std::to_string(ops.imm) : ops.label;
    };
    switch (in.kind) {
      case Kind::kNop:
        if (in.cls == InstructionSet::kNop) {
          out << "nop";
        } else {
          out << "trigger " << QuoteId(cls.id);
        }
        break;
      case Kind::kTrigger: out << "trigger " << QuoteId(cls.id); break;
      case Kind::kFence: out << "fence"; break;
      case Kind::kMovImm:
        out << "mov " << Reg(ops.reg_a) << ", " << target();
        break;
      case Kind::kLoadIndirect:
        out << "load " << Reg(ops.reg_a) << ", [" << Reg(ops.reg_b) << "]";
        break;
      case Kind::kStore:
        out << "store [" << Reg(ops.reg_a) << "], " << Reg(ops.reg_b);
        break;
      case Kind::kCmpReg:
        out << "cmp " << Reg(ops.reg_a) << ", " << Reg(ops.reg_b);
        break;
      case Kind::kJcc:
        out << (in.cond == Condition::kEqual ? "je " : "jne ") << target();
        break;
      case Kind::kJmp:
        out << "jmp " << (ops.indirect ? Reg(ops.reg_a) : target());
        break;
      case Kind::kClflush: out << "clflush [" << Reg(ops.reg_a) << "]"; break;
      case Kind::kReadPmu:
        out << "rdpmu " << Reg(ops.reg_a) << ", " << ops.imm;
        break;
    }
    out << "\n";
  }
  emit_labels(static_cast<uint32_t>(program.code.size()));
  return out.str();
}

}  // namespace pmuspill::isa
