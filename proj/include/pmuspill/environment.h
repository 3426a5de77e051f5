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

#ifndef PMUSPILL_ENVIRONMENT_H_
#define PMUSPILL_ENVIRONMENT_H_

#include <cstdint>
#include <memory>
#include <span>

#include "pmuspill/mitigation.h"
#include "pmuspill/pmu.h"
#include "pmuspill/sim.h"

namespace pmuspill {

struct EnvConfig {
  sim::SimConfig sim;
  pmu::NoiseConfig noise;
  int slots = 8;
  bool root = true;
  sim::SuppressionMode suppression = sim::SuppressionMode::kTsxLike;
  uint64_t secret_base = 0x10000;
  uint64_t secret_capacity = 0x10000;
};

// Everything a leak needs besides the gadget: the bound platform, the
// mitigation policy in force, and the victim's planted secret.
class Environment {
 public:
  Environment(std::shared_ptr<const pmu::Platform> platform, EnvConfig config);

  // Takes effect for machines and counter files created afterwards. Throws
  // UnknownEvent on a per-event disable naming a missing event.
  void ApplyPolicy(const mitigation::MitigationPolicy& policy);

  // Provisions the victim. On REFUSED the secret region stays unpopulated.
  // Throws InvalidSpec if the secret does not fit the region.
  mitigation::LaunchStatus PlantSecret(std::span<const uint8_t> secret);

  sim::MachineState NewMachine() const { return machine_; }
  // Counters for one leak; `stream` separates the noise draws of
  // independent leaks.
  pmu::CounterFile NewCounters(uint64_t stream) const;
  sim::Simulator simulator() const { return sim::Simulator(config_.sim); }

  uint64_t SecretAddress(std::size_t offset) const {
    return config_.secret_base + offset;
  }
  sim::AddressRange secret_region() const {
    return {config_.secret_base, config_.secret_base + config_.secret_capacity};
  }
  const EnvConfig& config() const { return config_; }
  const mitigation::MitigationPolicy& policy() const { return policy_; }
  mitigation::LaunchStatus launch_status() const { return launch_; }
  const std::shared_ptr<const pmu::Platform>& platform() const {
    return platform_;
  }

 private:
  std::shared_ptr<const pmu::Platform> platform_;
  EnvConfig config_;
  mitigation::MitigationPolicy policy_;
  std::set<pmu::EventIndex> disabled_;
  mitigation::LaunchStatus launch_ = mitigation::LaunchStatus::kLaunchOk;
  sim::MachineState machine_;
};

}  // namespace pmuspill

#endif  // PMUSPILL_ENVIRONMENT_H_
