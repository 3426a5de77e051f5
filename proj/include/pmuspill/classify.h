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

#ifndef PMUSPILL_CLASSIFY_H_
#define PMUSPILL_CLASSIFY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pmuspill/isa.h"

namespace pmuspill::isa {

// An instruction as it appears in an ingested database.
struct InstrRecord {
  std::string asm_text;
  std::string extension;
  std::map<std::string, std::string> attributes;
  std::string provenance;
};

// mnemonic -> signature. An empty signature makes the mnemonic event-silent.
using ExplicitMapping = std::map<std::string, std::vector<SignatureEntry>>;

// Parses {"mnemonic": [["EVENT", n], ...], ...}. A mnemonic listed twice with
// different signatures throws MappingConflict; malformed text throws
// ParseError.
ExplicitMapping ParseMapping(std::string_view json_text);
ExplicitMapping LoadMapping(const std::filesystem::path& path);

struct ClassifyConfig {
  uint64_t seed = 42;
  // Probability that an unmapped instruction gets a synthetic event.
  double attach_probability = 0.15;
  // Instruction-tagged catalog events the synthetic event is drawn from.
  std::vector<std::string> tagged_events;
};

// Abstracts a real instruction into a slot class. A pure function of
// (record, mapping, config). A non-empty signature yields a TRIGGER class,
// an empty one a NOP class.
InstrClass Classify(const InstrRecord& record, const ExplicitMapping* mapping,
                    const ClassifyConfig& config);

}  // namespace pmuspill::isa

#endif  // PMUSPILL_CLASSIFY_H_
