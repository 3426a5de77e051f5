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

#include "pmuspill/mitigation.h"

#include "pmuspill/errors.h"

namespace pmuspill::mitigation {

std::string_view LaunchStatusName(LaunchStatus status) {
  return status == LaunchStatus::kLaunchOk ? "LAUNCH_OK" : "REFUSED";
}

LaunchStatus TeeLaunchCheck(const MitigationPolicy& policy) {
  if (policy.tee_gate && policy.pmu_policy != pmu::Policy::kDisabled) {
    return LaunchStatus::kRefused;
  }
  return LaunchStatus::kLaunchOk;
}

std::set<pmu::EventIndex> ResolveDisabled(const MitigationPolicy& policy,
                                          const pmu::Catalog& catalog) {
  std::set<pmu::EventIndex> out;
  for (const auto& name : policy.per_event_disable) {
    auto index = catalog.Find(name);
    if (!index) throw UnknownEvent("cannot disable unknown event " + name);
    out.insert(*index);
  }
  return out;
}

}  // namespace pmuspill::mitigation
