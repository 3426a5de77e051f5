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

#ifndef PMUSPILL_PROFILE_H_
#define PMUSPILL_PROFILE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmuspill/environment.h"
#include "pmuspill/isa.h"
#include "pmuspill/pmu.h"

namespace pmuspill::profile {

// Source for a legitimate workload to profile: moves, loads and stores to a
// scratch buffer, unprivileged slot classes, flushes, fences and forward
// jumps. It never faults and has no conditional branch, so nothing it does
// is ever squashed.
std::string BenchmarkSource(const isa::InstructionSet& iset, uint64_t seed,
                            std::size_t length);

// Runs `program` once from a fresh machine with `events` programmed in
// groups of the slot count, and returns what a profiler reads back for each
// event: empty where the read is refused.
std::vector<std::optional<uint64_t>> ProfileCounts(const Environment& env,
                                    const isa::Program& program,
                                    std::span<const pmu::EventIndex> events);

}  // namespace pmuspill::profile

#endif  // PMUSPILL_PROFILE_H_
