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

#include <string>

#include <gtest/gtest.h>

#include "pmuspill/classify.h"
#include "pmuspill/errors.h"

namespace pmuspill::isa {
namespace {

InstrRecord Record(std::string asm_text, std::string ext = "BASE") {
  return {.asm_text = std::move(asm_text), .extension = std::move(ext)};
}

TEST(ParseMappingTest, ReadsSignaturesSorted) {
  const auto m = ParseMapping(R"src({
    "DIV (R64)": [["B", 2], ["A", 1]],
    "NOP": []
  })src");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at("DIV (R64)"),
            (std::vector<SignatureEntry>{{"A", 1}, {"B", 2}}));
  EXPECT_TRUE(m.at("NOP").empty());
}

TEST(ParseMappingTest, ConflictingDuplicateThrows) {
  EXPECT_THROW(ParseMapping(R"src({"X": [["A", 1]], "X": [["A", 2]]})src"),
               MappingConflict);
}

TEST(ParseMappingTest, IdenticalDuplicateIsAccepted) {
  const auto m = ParseMapping(R"src({"X": [["A", 1]], "X": [["A", 1]]})src");
  EXPECT_EQ(m.at("X").size(), 1u);
}

TEST(ParseMappingTest, MalformedThrowsParseError) {
  EXPECT_THROW(ParseMapping("{"), ParseError);
  EXPECT_THROW(ParseMapping("[]"), ParseError);
  EXPECT_THROW(ParseMapping(R"src({"X": 3})src"), ParseError);
  EXPECT_THROW(ParseMapping(R"src({"X": [["A"]]})src"), ParseError);
  EXPECT_THROW(ParseMapping(R"src({"X": [["A", -1]]})src"), ParseError);
}

TEST(ClassifyTest, ExplicitEmptySignatureIsNop) {
  ExplicitMapping m{{"PAUSE", {}}};
  ClassifyConfig config{.attach_probability = 1.0, .tagged_events = {"E"}};
  const auto cls = Classify(Record("PAUSE"), &m, config);
  EXPECT_EQ(cls.kind, Kind::kNop);
  EXPECT_TRUE(cls.signature.empty());
  EXPECT_NO_THROW(Validate(cls));
}

TEST(ClassifyTest, ExplicitSignatureIsTrigger) {
  ExplicitMapping m{{"DIV (R64)", {{"ARITH.DIVIDER_ACTIVE", 3}}}};
  const auto cls = Classify(Record("DIV (R64)"), &m, {});
  EXPECT_EQ(cls.kind, Kind::kTrigger);
  ASSERT_EQ(cls.signature.size(), 1u);
  EXPECT_EQ(cls.signature[0].increment, 3u);
  EXPECT_NE(cls.provenance.find("mapping"), std::string::npos);
}

TEST(ClassifyTest, AttachProbabilityExtremes) {
  ClassifyConfig never{.attach_probability = 0.0, .tagged_events = {"E1", "E2"}};
  ClassifyConfig always{.attach_probability = 1.0, .tagged_events = {"E1", "E2"}};
  ClassifyConfig empty_universe{.attach_probability = 1.0};
  for (int i = 0; i < 100; ++i) {
    const auto r = Record("OP" + std::to_string(i));
    EXPECT_EQ(Classify(r, nullptr, never).kind, Kind::kNop);
    EXPECT_EQ(Classify(r, nullptr, empty_universe).kind, Kind::kNop);
    const auto t = Classify(r, nullptr, always);
    EXPECT_EQ(t.kind, Kind::kTrigger);
    ASSERT_EQ(t.signature.size(), 1u);
    EXPECT_TRUE(t.signature[0].event == "E1" || t.signature[0].event == "E2");
  }
}

TEST(ClassifyTest, PureFunctionOfInputs) {
  ClassifyConfig config{.seed = 9, .attach_probability = 0.5,
                        .tagged_events = {"A", "B", "C"}};
  int triggers = 0;
  for (int i = 0; i < 400; ++i) {
    const auto r = Record("INSN" + std::to_string(i));
    const auto a = Classify(r, nullptr, config);
    EXPECT_EQ(a, Classify(r, nullptr, config));
    EXPECT_GE(a.latency, 1u);
    EXPECT_LE(a.latency, 3u);
    triggers += a.kind == Kind::kTrigger;
  }
  // Binomial(400, 0.5): six sigma is 60.
  EXPECT_NEAR(triggers, 200, 60);
}

TEST(ClassifyTest, SeedChangesAssignment) {
  ClassifyConfig a{.seed = 1, .attach_probability = 0.5, .tagged_events = {"E"}};
  ClassifyConfig b = a;
  b.seed = 2;
  int differ = 0;
  for (int i = 0; i < 200; ++i) {
    const auto r = Record("X" + std::to_string(i));
    differ += Classify(r, nullptr, a).kind != Classify(r, nullptr, b).kind;
  }
  EXPECT_GT(differ, 0);
}

TEST(ClassifyTest, EmptyAsmThrows) {
  EXPECT_THROW(Classify(Record(""), nullptr, {}), InvalidInstrClass);
}

}  // namespace
}  // namespace pmuspill::isa
