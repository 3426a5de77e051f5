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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pmuspill/errors.h"
#include "pmuspill/pmu.h"
#include "test_util.h"

namespace pmuspill::pmu {
namespace {

using testing::TinyPlatform;

struct Fixture {
  std::shared_ptr<const Platform> platform = TinyPlatform();
  EventIndex Event(const char* name) const {
    return *platform->catalog().Find(name);
  }
  CounterFile Counters(Policy policy, NoiseConfig noise = {}) const {
    return CounterFile(platform, {.slots = 4, .policy = policy, .noise = noise});
  }
};

TEST(CatalogTest, RejectsDuplicates) {
  Catalog c;
  c.Add(testing::StructuralEvent("A.X", 1, StructuralKind::kCycles,
                                 Persistence::kRetirementCounted));
  EXPECT_THROW(c.Add(testing::StructuralEvent("A.X", 2, StructuralKind::kCycles,
                                              Persistence::kRetirementCounted)),
               DuplicateEvent);
  EXPECT_THROW(c.Add(testing::StructuralEvent("A.Y", 1, StructuralKind::kCycles,
                                              Persistence::kRetirementCounted)),
               DuplicateEvent);
  auto qualified = testing::StructuralEvent("A.Z", 1, StructuralKind::kCycles,
                                            Persistence::kRetirementCounted);
  qualified.counter_mask = 1;
  EXPECT_NO_THROW(c.Add(qualified));
  EXPECT_EQ(c.size(), 2u);
}

TEST(CatalogTest, EmptyTaggedSetIsRejected) {
  Catalog c;
  EXPECT_THROW(c.Add(testing::TaggedEvent("T.X", 1, {},
                                          Persistence::kRetirementCounted)),
               ParseError);
}

TEST(PlatformTest, HitsMergeSignatureAndTaggedSets) {
  Fixture f;
  const auto& iset = f.platform->iset();
  const auto div = *iset.Find("DIV (R64)");
  ASSERT_EQ(f.platform->HitsFor(div).size(), 1u);
  EXPECT_EQ(f.platform->HitsFor(div)[0].event, f.Event("ARITH.DIVIDER_ACTIVE"));
  const auto sqrt = *iset.Find("VSQRTPS (YMM, YMM)");
  EXPECT_EQ(f.platform->HitsFor(sqrt).size(), 2u);
  EXPECT_TRUE(f.platform->HitsFor(*iset.Find("ADD (R64, R64)")).empty());
  EXPECT_EQ(f.platform->TriggerClasses(f.Event("RS_EVENTS.EMPTY_CYCLES")),
            std::vector<isa::ClassIndex>{sqrt});
}

TEST(CounterFileTest, ProgramResetsAndReads) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable);
  c.Program(0, f.Event("INST_RETIRED.ANY"));
  c.OnStructural(StructuralKind::kInstruction, 5, false);
  EXPECT_EQ(c.Read(0), 5u);
  c.Program(0, f.Event("INST_RETIRED.ANY"));
  EXPECT_EQ(c.Read(0), 0u);
  c.OnStructural(StructuralKind::kInstruction, 1, false);
  EXPECT_EQ(c.Peek(0), 1u);
}

TEST(CounterFileTest, ReprogrammingMovesTheBinding) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable);
  c.Program(1, f.Event("INST_RETIRED.ANY"));
  c.Program(1, f.Event("UOPS_ISSUED.ANY"));
  c.OnStructural(StructuralKind::kInstruction, 3, false);
  c.OnStructural(StructuralKind::kUopIssued, 2, false);
  EXPECT_EQ(c.Read(1), 2u);
}

TEST(CounterFileTest, ProgramByDefinition) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable);
  const auto& def = f.platform->catalog().at(f.Event("UOPS_ISSUED.ANY"));
  c.Program(2, def);
  EXPECT_EQ(c.Programmed(2), f.Event("UOPS_ISSUED.ANY"));
  auto foreign = def;
  foreign.umask = 0x77;
  EXPECT_THROW(c.Program(2, foreign), UnknownEvent);
}

TEST(CounterFileTest, Errors) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable);
  EXPECT_THROW(c.Program(4, 0), InvalidSlot);
  EXPECT_THROW(c.Program(-1, 0), InvalidSlot);
  EXPECT_THROW(c.Program(0, 999), UnknownEvent);
  EXPECT_THROW(c.Read(0), InvalidSlot);
  EXPECT_THROW(c.Read(9), InvalidSlot);
  EXPECT_THROW(CounterFile(f.platform, {.slots = 0}), InvalidSlot);

  CounterFile user(f.platform, {.slots = 2, .root = false});
  user.Program(0, 0);
  EXPECT_THROW(user.Read(0), NoPrivilege);
  uint64_t v = 9;
  EXPECT_EQ(user.TryRead(0, &v), ReadStatus::kNoPrivilege);
  EXPECT_EQ(v, 0u);

  CounterFile off(f.platform, {.slots = 2, .policy = Policy::kDisabled});
  EXPECT_THROW(off.Read(0), PmuDisabled);

  CounterFile gated(f.platform, {.slots = 2, .reads_blocked = true});
  gated.Program(0, 0);
  EXPECT_THROW(gated.Read(0), PmuDisabled);

  CounterFile masked(f.platform, {.slots = 2, .disabled_events = {3}});
  EXPECT_THROW(masked.Program(0, 3), EventDisabled);
  EXPECT_NO_THROW(masked.Program(0, 2));
}

// Expected count after one architectural and one transient increment, per
// (policy, persistence).
struct PolicyCase {
  Policy policy;
  bool speculative_event;
  uint64_t after_transient;
  uint64_t after_retire;
};

class PolicyTest : public ::testing::TestWithParam<PolicyCase> {};

TEST_P(PolicyTest, TransientVisibility) {
  Fixture f;
  const auto& pc = GetParam();
  auto c = f.Counters(pc.policy);
  const EventIndex e = pc.speculative_event ? f.Event("UOPS_ISSUED.ANY")
                                            : f.Event("INST_RETIRED.ANY");
  const auto kind = pc.speculative_event ? StructuralKind::kUopIssued
                                         : StructuralKind::kInstruction;
  c.Program(0, e);
  c.OnStructural(kind, 1, false);
  c.OnStructural(kind, 4, true);
  EXPECT_EQ(c.Peek(0), pc.after_transient);
  c.OnSquash();
  c.OnRetire();
  EXPECT_EQ(c.Peek(0), pc.after_retire);
  EXPECT_EQ(c.Shadow(0), 0u);
}

INSTANTIATE_TEST_SUITE_P(
    Table, PolicyTest,
    ::testing::Values(PolicyCase{Policy::kVulnerable, true, 5, 5},
                      PolicyCase{Policy::kVulnerable, false, 1, 1},
                      PolicyCase{Policy::kRetireOnly, true, 1, 1},
                      PolicyCase{Policy::kRetireOnly, false, 1, 1},
                      PolicyCase{Policy::kRenamed, true, 1, 1},
                      PolicyCase{Policy::kRenamed, false, 1, 1},
                      PolicyCase{Policy::kDisabled, true, 1, 1}));

TEST(RenamedTest, ShadowCommitsOnRetireWithoutSquash) {
  Fixture f;
  auto c = f.Counters(Policy::kRenamed);
  c.Program(0, f.Event("UOPS_ISSUED.ANY"));
  c.OnStructural(StructuralKind::kUopIssued, 3, true);
  EXPECT_EQ(c.Shadow(0), 3u);
  c.OnRetire();
  EXPECT_EQ(c.Peek(0), 3u);
}

TEST(BaselineTest, AccruesOnEveryReadAfterTheFirst) {
  auto platform = TinyPlatform();
  Catalog catalog;
  auto e = testing::StructuralEvent("CYC.X", 1, StructuralKind::kCycles,
                                    Persistence::kRetirementCounted);
  e.baseline = 7;
  catalog.Add(e);
  auto p = std::make_shared<const Platform>(platform->iset(), catalog);
  CounterFile c(p, {.slots = 1});
  c.Program(0, 0);
  EXPECT_EQ(c.Read(0), 0u);
  EXPECT_EQ(c.Read(0), 7u);
  c.OnStructural(StructuralKind::kCycles, 2, false);
  EXPECT_EQ(c.Read(0), 16u);
}

TEST(TaggedTest, IncrementsFollowSignatureAndTaggedSets) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable);
  c.Program(0, f.Event("RS_EVENTS.EMPTY_CYCLES"));
  c.Program(1, f.Event("UOPS_EXECUTED.X87"));
  c.Program(2, f.Event("ARITH.DIVIDER_ACTIVE"));
  const auto& iset = f.platform->iset();
  c.OnInstruction(*iset.Find("VSQRTPS (YMM, YMM)"), true);
  c.OnInstruction(*iset.Find("DIV (R64)"), false);
  c.OnInstruction(*iset.Find("ADD (R64, R64)"), false);
  EXPECT_EQ(c.Peek(0), 1u);
  EXPECT_EQ(c.Peek(1), 0u);  // retirement-counted, transient
  EXPECT_EQ(c.Peek(2), 1u);
}

TEST(NoiseTest, ZeroNoiseDrawsNothing) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable, {.p = 0.0, .seed = 3});
  c.Program(0, 0);
  for (int run = 0; run < 50; ++run) {
    c.BeginRun(4, 1);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(c.Read(0), 0u);
  }
}

TEST(NoiseTest, SpuriousRateMatchesProbability) {
  Fixture f;
  const double p = 0.2;
  auto c = f.Counters(Policy::kVulnerable, {.p = p, .seed = 5});
  c.Program(0, 0);
  const int runs = 20000;
  const int windows = 8;
  uint64_t total = 0;
  std::vector<int> per_window(windows, 0);
  uint64_t last = c.Read(0);
  for (int run = 0; run < runs; ++run) {
    c.BeginRun(windows, 1);
    for (int w = 0; w < windows; ++w) {
      const uint64_t now = c.Read(0);
      per_window[w] += static_cast<int>(now - last);
      total += now - last;
      last = now;
    }
  }
  const double mean = static_cast<double>(total) / runs;
  const double sd = std::sqrt(p * (1 - p) / runs);
  EXPECT_NEAR(mean, p, 6 * sd);
  // Landing window is uniform.
  for (int w = 0; w < windows; ++w) {
    EXPECT_NEAR(per_window[w], runs * p / windows,
                6 * std::sqrt(runs * p / windows));
  }
}

TEST(NoiseTest, BurstLengthsAreGeometric) {
  Fixture f;
  auto c = f.Counters(Policy::kVulnerable,
                      {.burst_p = 1.0, .burst_continue = 0.5, .seed = 8});
  c.Program(0, 0);
  const int runs = 20000;
  uint64_t total = 0;
  uint64_t last = c.Read(0);
  for (int run = 0; run < runs; ++run) {
    c.BeginRun(1, 1);
    const uint64_t now = c.Read(0);
    ASSERT_GE(now - last, 1u);
    total += now - last;
    last = now;
  }
  // 1 + Geometric(0.5) has mean 2 and variance 2.
  EXPECT_NEAR(static_cast<double>(total) / runs, 2.0,
              6 * std::sqrt(2.0 / runs));
}

TEST(NoiseTest, SameSeedSameDraws) {
  Fixture f;
  auto a = f.Counters(Policy::kVulnerable, {.p = 0.5, .seed = 77});
  auto b = f.Counters(Policy::kVulnerable, {.p = 0.5, .seed = 77});
  a.Program(0, 0);
  b.Program(0, 0);
  for (int run = 0; run < 200; ++run) {
    a.BeginRun(3, 2);
    b.BeginRun(3, 2);
    for (int i = 0; i < 6; ++i) ASSERT_EQ(a.Read(0), b.Read(0));
  }
}

TEST(NamesTest, RoundTrip) {
  for (std::size_t k = 0; k < kNumStructuralKinds; ++k) {
    const auto kind = static_cast<StructuralKind>(k);
    EXPECT_EQ(ParseStructural(StructuralName(kind)), kind);
  }
  for (auto p : {Policy::kVulnerable, Policy::kRetireOnly, Policy::kRenamed,
                 Policy::kDisabled}) {
    EXPECT_EQ(ParsePolicy(PolicyName(p)), p);
  }
  EXPECT_EQ(ParsePolicy("retire-only"), Policy::kRetireOnly);
  EXPECT_FALSE(ParsePolicy("bogus"));
  EXPECT_FALSE(ParseStructural("bogus"));
}

}  // namespace
}  // namespace pmuspill::pmu
