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

#ifndef PMUSPILL_ISA_H_
#define PMUSPILL_ISA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pmuspill::isa {

enum class Kind : uint8_t {
  kLoadIndirect,
  kStore,
  kMovImm,
  kCmpReg,
  kJcc,
  kJmp,
  kNop,
  kClflush,
  kFence,
  kReadPmu,
  kTrigger,
};

enum class Fault : uint8_t { kNone, kPrivileged };

std::string_view KindName(Kind kind);

// One PMU event fired by executing an instruction. `event` is a catalog event
// name; it is resolved against a catalog when the instruction set is bound.
struct SignatureEntry {
  std::string event;
  uint32_t increment = 1;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
  friend auto operator<=>(const SignatureEntry&, const SignatureEntry&) = default;
};

struct InstrClass {
  std::string id;
  std::string mnemonic;
  Kind kind = Kind::kNop;
  Fault fault = Fault::kNone;
  std::vector<SignatureEntry> signature;
  uint32_t latency = 1;
  // Where the class came from: "builtin", "xml:<path>#<n>", "mapping", ...
  std::string provenance;

  friend bool operator==(const InstrClass&, const InstrClass&) = default;
};

// Throws InvalidInstrClass when the class breaks a kind/signature rule.
void Validate(const InstrClass& cls);

using ClassIndex = uint32_t;

// The classes a program may reference. Index 0..kBuiltinCount-1 always holds
// the micro-ops the assembler knows by keyword; ingested classes follow in
// insertion order.
class InstructionSet {
 public:
  static constexpr ClassIndex kNop = 0;
  static constexpr ClassIndex kMov = 1;
  static constexpr ClassIndex kLoad = 2;
  static constexpr ClassIndex kStore = 3;
  static constexpr ClassIndex kCmp = 4;
  static constexpr ClassIndex kJe = 5;
  static constexpr ClassIndex kJne = 6;
  static constexpr ClassIndex kJmp = 7;
  static constexpr ClassIndex kClflush = 8;
  static constexpr ClassIndex kFence = 9;
  static constexpr ClassIndex kReadPmu = 10;
  static constexpr ClassIndex kBuiltinCount = 11;

  InstructionSet();

  // Throws InvalidInstrClass on a duplicate id or a malformed class.
  ClassIndex Add(InstrClass cls);

  const InstrClass& at(ClassIndex index) const { return classes_.at(index); }
  std::optional<ClassIndex> Find(std::string_view id) const;
  std::size_t size() const { return classes_.size(); }
  std::span<const InstrClass> classes() const { return classes_; }

  // Indices of the non-builtin classes, in insertion order.
  std::vector<ClassIndex> Ingested() const;
  std::size_t ingested_count() const { return classes_.size() - kBuiltinCount; }

 private:
  std::vector<InstrClass> classes_;
  std::unordered_map<std::string, ClassIndex> by_id_;
};

constexpr int kNumRegisters = 16;

enum class Condition : uint8_t { kEqual, kNotEqual };

struct Operands {
  uint8_t reg_a = 0;  // destination, compared register, or address register
  uint8_t reg_b = 0;  // second source
  int64_t imm = 0;    // immediate, counter slot, or resolved label index
  bool indirect = false;  // jmp through reg_a
  std::string label;      // source-level label, kept for rendering

  friend bool operator==(const Operands&, const Operands&) = default;
};

struct Instruction {
  ClassIndex cls = InstructionSet::kNop;
  // Cached from the class.
  Kind kind = Kind::kNop;
  bool privileged = false;
  uint32_t latency = 1;
  Condition cond = Condition::kEqual;
  Operands ops;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Program {
  std::vector<Instruction> code;
  std::map<std::string, uint32_t> labels;
  // For each index, where execution resumes after a fault raised there: one
  // past the first FENCE at or after the index, or code.size().
  std::vector<uint32_t> recovery_point;

  std::size_t size() const { return code.size(); }
  void ComputeRecoveryPoints();
};

// Parses micro-assembly. Throws SyntaxError on an unknown mnemonic, an
// unresolved label, a bad register, or an operand-arity mismatch.
Program Assemble(std::string_view source, const InstructionSet& iset);

// Spells a class id as a trigger operand, quoting it when it is not a bare
// identifier.
std::string QuoteId(std::string_view id);

// Inverse of Assemble up to whitespace and comments.
std::string Render(const Program& program, const InstructionSet& iset);

}  // namespace pmuspill::isa

#endif  // PMUSPILL_ISA_H_
