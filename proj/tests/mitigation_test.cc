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

#include <algorithm>
#include <optional>

#include <gtest/gtest.h>

#include "pmuspill/attack.h"
#include "pmuspill/environment.h"
#include "pmuspill/errors.h"
#include "pmuspill/mitigation.h"
#include "pmuspill/profile.h"
#include "test_util.h"

namespace pmuspill::mitigation {
namespace {

using pmu::Policy;

struct LaunchCase {
  Policy policy;
  bool gate;
  LaunchStatus expected;
};

class LaunchCheckTest : public ::testing::TestWithParam<LaunchCase> {};

TEST_P(LaunchCheckTest, Table) {
  const auto& c = GetParam();
  EXPECT_EQ(TeeLaunchCheck({.pmu_policy = c.policy, .tee_gate = c.gate}),
            c.expected);
}

INSTANTIATE_TEST_SUITE_P(
    AllPolicies, LaunchCheckTest,
    ::testing::Values(
        LaunchCase{Policy::kDisabled, true, LaunchStatus::kLaunchOk},
        LaunchCase{Policy::kVulnerable, true, LaunchStatus::kRefused},
        LaunchCase{Policy::kRetireOnly, true, LaunchStatus::kRefused},
        LaunchCase{Policy::kRenamed, true, LaunchStatus::kRefused},
        LaunchCase{Policy::kVulnerable, false, LaunchStatus::kLaunchOk},
        LaunchCase{Policy::kRetireOnly, false, LaunchStatus::kLaunchOk},
        LaunchCase{Policy::kRenamed, false, LaunchStatus::kLaunchOk},
        LaunchCase{Policy::kDisabled, false, LaunchStatus::kLaunchOk}));

TEST(ResolveDisabledTest, NamesToIndices) {
  auto platform = testing::TinyPlatform();
  MitigationPolicy p;
  p.per_event_disable = {"UOPS_ISSUED.ANY", "BR_MISP_EXEC.ALL_BRANCHES"};
  const auto out = ResolveDisabled(p, platform->catalog());
  EXPECT_EQ(out, (std::set<pmu::EventIndex>{
                     *platform->catalog().Find("UOPS_ISSUED.ANY"),
                     *platform->catalog().Find("BR_MISP_EXEC.ALL_BRANCHES")}));
  p.per_event_disable.insert("NOT.AN_EVENT");
  EXPECT_THROW(ResolveDisabled(p, platform->catalog()), UnknownEvent);
}

EnvConfig SmallEnv() {
  EnvConfig config;
  config.secret_capacity = 0x100;
  return config;
}

TEST(EnvironmentTest, RefusedLaunchLeavesSecretUnmapped) {
  Environment env(testing::TinyPlatform(), SmallEnv());
  env.ApplyPolicy({.pmu_policy = Policy::kVulnerable, .tee_gate = true});
  const uint8_t secret[] = {1, 2, 3};
  EXPECT_EQ(env.PlantSecret(secret), LaunchStatus::kRefused);
  const auto m = env.NewMachine();
  EXPECT_FALSE(m.secret_mapped);
  EXPECT_EQ(m.mem.Read(env.SecretAddress(1)), 0);
}

TEST(EnvironmentTest, GatedLaunchWithPmuOffBlocksReads) {
  Environment env(testing::TinyPlatform(), SmallEnv());
  env.ApplyPolicy({.pmu_policy = Policy::kDisabled, .tee_gate = true});
  const uint8_t secret[] = {9};
  EXPECT_EQ(env.PlantSecret(secret), LaunchStatus::kLaunchOk);
  EXPECT_TRUE(env.NewMachine().secret_mapped);
  EXPECT_EQ(env.NewMachine().mem.Read(env.SecretAddress(0)), 9);
  EXPECT_TRUE(env.NewCounters(0).config().reads_blocked);
}

TEST(EnvironmentTest, OversizedSecretIsRejected) {
  Environment env(testing::TinyPlatform(), SmallEnv());
  std::vector<uint8_t> secret(0x101);
  EXPECT_THROW(env.PlantSecret(secret), InvalidSpec);
}

TEST(EnvironmentTest, DisabledEventsReachTheCounterFile) {
  auto platform = testing::TinyPlatform();
  Environment env(platform, SmallEnv());
  env.ApplyPolicy({.per_event_disable = {"UOPS_ISSUED.ANY"}});
  auto counters = env.NewCounters(0);
  EXPECT_THROW(counters.Program(0, *platform->catalog().Find("UOPS_ISSUED.ANY")),
               EventDisabled);
  EXPECT_THROW(env.ApplyPolicy({.per_event_disable = {"NOPE"}}), UnknownEvent);
}

// Fault-free programs must profile the same under every policy that lets
// counting happen at all.
TEST(ProfilingTransparencyTest, RenamedMatchesVulnerable) {
  const auto& platform = testing::SamplePlatform().platform;
  std::vector<pmu::EventIndex> events;
  for (pmu::EventIndex e = 0; e < platform->catalog().size(); ++e) {
    events.push_back(e);
  }
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const auto program =
        isa::Assemble(profile::BenchmarkSource(platform->iset(), seed, 300),
                      platform->iset());
    std::vector<std::vector<std::optional<uint64_t>>> counts;
    for (Policy p : {Policy::kVulnerable, Policy::kRenamed, Policy::kRetireOnly}) {
      Environment env(platform, EnvConfig{});
      env.ApplyPolicy({.pmu_policy = p});
      const uint8_t secret[] = {0x5A};
      env.PlantSecret(secret);
      counts.push_back(profile::ProfileCounts(env, program, events));
    }
    EXPECT_EQ(counts[0], counts[1]) << "seed " << seed;
    EXPECT_EQ(counts[0], counts[2]) << "seed " << seed;
    EXPECT_TRUE(std::all_of(counts[0].begin(), counts[0].end(),
                            [](const auto& v) { return v.has_value(); }));
    EXPECT_TRUE(std::any_of(counts[0].begin(), counts[0].end(),
                            [](const auto& v) { return v > 0u; }));
  }
}

// A profiler gets nothing back where the PMU refuses reads.
TEST(ProfilingTransparencyTest, BlockedReadsReturnNothing) {
  const auto& platform = testing::SamplePlatform().platform;
  const std::vector<pmu::EventIndex> events = {0, 1, 2};
  const auto program = isa::Assemble(
      profile::BenchmarkSource(platform->iset(), 3, 100), platform->iset());
  const uint8_t secret[] = {0x5A};
  auto counts = [&](mitigation::MitigationPolicy policy, bool root) {
    Environment env(platform, EnvConfig{.root = root});
    env.ApplyPolicy(policy);
    env.PlantSecret(secret);
    return profile::ProfileCounts(env, program, events);
  };
  const std::vector<std::optional<uint64_t>> none(events.size());
  EXPECT_EQ(counts({.pmu_policy = Policy::kDisabled}, true), none);
  EXPECT_EQ(counts({.pmu_policy = Policy::kDisabled, .tee_gate = true}, true), none);
  EXPECT_EQ(counts({}, false), none);
  EXPECT_NE(counts({}, true), none);
}

// In the attack setting every transient region is squashed, so renaming
// leaves exactly what retire-only counting leaves.
TEST(ProfilingTransparencyTest, RenamedEqualsRetireOnlyUnderSquash) {
  const auto& platform = testing::SamplePlatform().platform;
  attack::GadgetSpec spec;
  spec.slots = {0, 1, 2, 3, 4, 5, 6, 7};
  spec.comparison_domain = 16;
  const auto specs = platform->catalog().SpeculativeEvents();
  std::vector<pmu::EventIndex> events(specs.begin(), specs.begin() + 8);
  std::vector<std::vector<uint64_t>> deltas;
  for (Policy p : {Policy::kRenamed, Policy::kRetireOnly}) {
    Environment env(platform, EnvConfig{});
    env.ApplyPolicy({.pmu_policy = p});
    const uint8_t secret[] = {0x07};
    env.PlantSecret(secret);
    auto gadget = attack::BuildGadget(spec, platform->iset());
    attack::RetargetSecret(gadget, env.SecretAddress(0));
    std::vector<uint64_t> all;
    for (const auto& o : attack::LeakByteMulti(env, gadget, events, 2, 0)) {
      EXPECT_FALSE(o.ok());
      for (const auto& t : o.traces) {
        all.insert(all.end(), t.deltas.begin(), t.deltas.end());
      }
    }
    deltas.push_back(std::move(all));
  }
  EXPECT_EQ(deltas[0], deltas[1]);
}

}  // namespace
}  // namespace pmuspill::mitigation
