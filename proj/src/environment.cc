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

#include "pmuspill/environment.h"

#include "pmuspill/errors.h"

namespace pmuspill {

Environment::Environment(std::shared_ptr<const pmu::Platform> platform,
                         EnvConfig config)
    : platform_(std::move(platform)),
      config_(config),
      machine_(config_.sim) {
  if (config_.secret_capacity == 0) {
    throw ConfigError("secret region must be non-empty");
  }
  machine_.secret_region = secret_region();
  machine_.secret_mapped = false;
}

void Environment::ApplyPolicy(const mitigation::MitigationPolicy& policy) {
  disabled_ = mitigation::ResolveDisabled(policy, platform_->catalog());
  policy_ = policy;
}

mitigation::LaunchStatus Environment::PlantSecret(
    std::span<const uint8_t> secret) {
  if (secret.size() > config_.secret_capacity) {
    throw InvalidSpec("secret of " + std::to_string(secret.size()) +
                      " bytes exceeds the secret region");
  }
  machine_ = sim::MachineState(config_.sim);
  machine_.secret_region = secret_region();
  launch_ = mitigation::TeeLaunchCheck(policy_);
  if (launch_ == mitigation::LaunchStatus::kRefused) {
    machine_.secret_mapped = false;
    return launch_;
  }
  machine_.secret_mapped = true;
  for (std::size_t i = 0; i < secret.size(); ++i) {
    const uint64_t addr = SecretAddress(i);
    machine_.mem.Write(addr, secret[i]);
    // The victim just touched its data.
    machine_.cache.Access(addr);
  }
  return launch_;
}

pmu::CounterFile Environment::NewCounters(uint64_t stream) const {
  pmu::CounterConfig cc;
  cc.slots = config_.slots;
  cc.policy = policy_.pmu_policy;
  cc.noise = config_.noise;
  cc.noise.seed = DeriveSeed(config_.noise.seed, stream);
  cc.root = config_.root;
  cc.reads_blocked = policy_.tee_gate &&
                     launch_ == mitigation::LaunchStatus::kLaunchOk &&
                     machine_.secret_mapped;
  cc.disabled_events = disabled_;
  return pmu::CounterFile(platform_, std::move(cc));
}

}  // namespace pmuspill
