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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "pmuspill/errors.h"
#include "pmuspill/isa.h"
#include "test_util.h"

namespace pmuspill::isa {
namespace {

InstructionSet TinySet() { return testing::TinyPlatform()->iset(); }

TEST(InstructionSetTest, BuiltinsOccupyFixedIndices) {
  InstructionSet iset;
  ASSERT_EQ(iset.size(), InstructionSet::kBuiltinCount);
  EXPECT_EQ(iset.at(InstructionSet::kLoad).kind, Kind::kLoadIndirect);
  EXPECT_EQ(iset.at(InstructionSet::kFence).kind, Kind::kFence);
  EXPECT_EQ(iset.at(InstructionSet::kReadPmu).kind, Kind::kReadPmu);
  EXPECT_EQ(*iset.Find("uop.nop"), InstructionSet::kNop);
  EXPECT_TRUE(iset.Ingested().empty());
}

TEST(InstructionSetTest, RejectsDuplicateIds) {
  InstructionSet iset;
  iset.Add({.id = "X", .mnemonic = "X"});
  EXPECT_THROW(iset.Add({.id = "X", .mnemonic = "X"}), InvalidInstrClass);
}

TEST(ValidateTest, KindSignatureRules) {
  InstrClass trigger{.id = "T", .mnemonic = "T", .kind = Kind::kTrigger};
  EXPECT_THROW(Validate(trigger), InvalidInstrClass);
  trigger.signature = {{"E", 1}};
  EXPECT_NO_THROW(Validate(trigger));
  trigger.signature = {{"E", 0}};
  EXPECT_THROW(Validate(trigger), InvalidInstrClass);

  InstrClass nop{.id = "N", .mnemonic = "N", .kind = Kind::kNop};
  EXPECT_NO_THROW(Validate(nop));
  nop.signature = {{"E", 1}};
  EXPECT_THROW(Validate(nop), InvalidInstrClass);

  InstrClass slow{.id = "S", .mnemonic = "S", .latency = 0};
  EXPECT_THROW(Validate(slow), InvalidInstrClass);
  EXPECT_THROW(Validate(InstrClass{}), InvalidInstrClass);
}

TEST(AssembleTest, ParsesEveryForm) {
  const auto iset = TinySet();
  const auto p = Assemble(R"src(
  start: mov r1, 0x10
         mov r2, -3        # negative immediate
         mov r3, start
         load r4, [r1]
         store [r1], r4
         cmp r1, r2
         je start
         jne done
         clflush [r1]
         rdpmu r5, 7
         trigger "DIV (R64)"
         nop
         jmp r3
  done:  fence
  )src", iset);
  ASSERT_EQ(p.size(), 14u);
  EXPECT_EQ(p.labels.at("start"), 0u);
  EXPECT_EQ(p.labels.at("done"), 13u);
  EXPECT_EQ(p.code[0].ops.imm, 0x10);
  EXPECT_EQ(p.code[1].ops.imm, -3);
  EXPECT_EQ(p.code[2].ops.imm, 0);
  EXPECT_EQ(p.code[3].kind, Kind::kLoadIndirect);
  EXPECT_EQ(p.code[3].ops.reg_a, 4);
  EXPECT_EQ(p.code[3].ops.reg_b, 1);
  EXPECT_EQ(p.code[4].ops.reg_a, 1);
  EXPECT_EQ(p.code[4].ops.reg_b, 4);
  EXPECT_EQ(p.code[6].cond, Condition::kEqual);
  EXPECT_EQ(p.code[7].cond, Condition::kNotEqual);
  EXPECT_EQ(p.code[7].ops.imm, 13);
  EXPECT_EQ(p.code[9].ops.imm, 7);
  EXPECT_EQ(p.code[10].kind, Kind::kTrigger);
  EXPECT_EQ(p.code[10].cls, *iset.Find("DIV (R64)"));
  EXPECT_TRUE(p.code[12].ops.indirect);
  EXPECT_EQ(p.code[12].ops.reg_a, 3);
  EXPECT_EQ(p.code[13].latency, 4u);
}

TEST(AssembleTest, PrivilegedClassIsMarked) {
  const auto iset = TinySet();
  const auto p = Assemble("trigger CPUID\ntrigger \"ADD (R64, R64)\"", iset);
  EXPECT_TRUE(p.code[0].privileged);
  EXPECT_FALSE(p.code[1].privileged);
}

struct BadSource {
  const char* text;
  std::size_t line;
};

class AssembleErrorTest : public ::testing::TestWithParam<BadSource> {};

TEST_P(AssembleErrorTest, ThrowsSyntaxErrorWithLine) {
  const auto iset = TinySet();
  try {
    Assemble(GetParam().text, iset);
    FAIL() << "accepted: " << GetParam().text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, AssembleErrorTest,
    ::testing::Values(BadSource{"frobnicate r1", 1},
                      BadSource{"nop\nmov r16, 1", 2},
                      BadSource{"mov r1", 1},
                      BadSource{"mov r1, 2, 3", 1},
                      BadSource{"nop\n\njmp nowhere", 3},
                      BadSource{"load r1, r2", 1},
                      BadSource{"store r1, [r2]", 1},
                      BadSource{"rdpmu r1, 256", 1},
                      BadSource{"rdpmu r1, slot", 1},
                      BadSource{"trigger NOSUCH", 1},
                      BadSource{"trigger uop.load", 1},
                      BadSource{"trigger \"DIV (R64)", 1},
                      BadSource{"a: nop\na: nop", 2},
                      BadSource{"je r3", 1},
                      BadSource{"mov r1, r2", 1}));

TEST(RecoveryPointTest, OnePastNextFence) {
  const auto iset = TinySet();
  const auto p = Assemble("nop\nfence\nnop\nnop\nfence\nnop", iset);
  EXPECT_EQ(p.recovery_point, (std::vector<uint32_t>{2, 2, 5, 5, 5, 6}));
}

TEST(RecoveryPointTest, MatchesBruteForceOnRandomPrograms) {
  const auto iset = TinySet();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::string src;
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) src += rng() % 4 == 0 ? "fence\n" : "nop\n";
    const auto p = Assemble(src, iset);
    for (uint32_t i = 0; i < p.size(); ++i) {
      uint32_t expect = static_cast<uint32_t>(p.size());
      for (uint32_t j = i; j < p.size(); ++j) {
        if (p.code[j].kind == Kind::kFence) {
          expect = j + 1;
          break;
        }
      }
      ASSERT_EQ(p.recovery_point[i], expect) << src;
    }
  }
}

TEST(RenderTest, RoundTripsRandomPrograms) {
  const auto iset = TinySet();
  std::mt19937_64 rng(11);
  const char* classes[] = {"\"DIV (R64)\"", "CPUID", "\"VSQRTPS (YMM, YMM)\""};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    std::string src;
    for (int i = 0; i < n; ++i) {
      src += "L" + std::to_string(i) + ": ";
      auto reg = [&] { return "r" + std::to_string(rng() % 16); };
      auto label = [&] { return "L" + std::to_string(rng() % n); };
      switch (rng() % 12) {
        case 0: src += "nop"; break;
        case 1: src += "fence"; break;
        case 2: src += "mov " + reg() + ", " + std::to_string(rng() % 100000); break;
        case 3: src += "mov " + reg() + ", " + label(); break;
        case 4: src += "load " + reg() + ", [" + reg() + "]"; break;
        case 5: src += "store [" + reg() + "], " + reg(); break;
        case 6: src += "cmp " + reg() + ", " + reg(); break;
        case 7: src += (rng() % 2 ? "je " : "jne ") + label(); break;
        case 8: src += "jmp " + (rng() % 2 ? reg() : label()); break;
        case 9: src += "clflush [" + reg() + "]"; break;
        case 10: src += "rdpmu " + reg() + ", " + std::to_string(rng() % 8); break;
        default: src += std::string("trigger ") + classes[rng() % 3]; break;
      }
      src += "\n";
    }
    const auto p = Assemble(src, iset);
    const auto text = Render(p, iset);
    const auto again = Assemble(text, iset);
    ASSERT_EQ(again.code, p.code) << src << "----\n" << text;
    ASSERT_EQ(again.labels, p.labels);
    ASSERT_EQ(Render(again, iset), text);
  }
}

TEST(QuoteIdTest, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(QuoteId("CPUID"), "CPUID");
  EXPECT_EQ(QuoteId("DIV (R64)"), "\"DIV (R64)\"");
  EXPECT_EQ(QuoteId("a\"b"), "\"a\\\"b\"");
}

}  // namespace
}  // namespace pmuspill::isa
