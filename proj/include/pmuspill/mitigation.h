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

#ifndef PMUSPILL_MITIGATION_H_
#define PMUSPILL_MITIGATION_H_

#include <set>
#include <string>
#include <string_view>

#include "pmuspill/pmu.h"

namespace pmuspill::mitigation {

struct MitigationPolicy {
  pmu::Policy pmu_policy = pmu::Policy::kVulnerable;
  // Refuse to provision an enclave while the PMU is usable.
  bool tee_gate = false;
  // Catalog event names that may not be programmed.
  std::set<std::string> per_event_disable;

  friend bool operator==(const MitigationPolicy&,
                         const MitigationPolicy&) = default;
};

enum class LaunchStatus : uint8_t { kLaunchOk, kRefused };

std::string_view LaunchStatusName(LaunchStatus status);

// REFUSED iff the gate is on and the PMU is not disabled.
LaunchStatus TeeLaunchCheck(const MitigationPolicy& policy);

// Resolves per_event_disable against `catalog`; throws UnknownEvent on a name
// the catalog lacks.
std::set<pmu::EventIndex> ResolveDisabled(const MitigationPolicy& policy,
                                          const pmu::Catalog& catalog);

}  // namespace pmuspill::mitigation

#endif  // PMUSPILL_MITIGATION_H_
