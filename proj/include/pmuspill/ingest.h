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

#ifndef PMUSPILL_INGEST_H_
#define PMUSPILL_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pmuspill/classify.h"
#include "pmuspill/isa.h"
#include "pmuspill/pmu.h"

namespace pmuspill::ingest {

// Parses a catalog document: a JSON array of event records. Empty text is an
// empty catalog. `origin` prefixes each event's provenance.
std::vector<pmu::EventDef> ParseEventCatalog(std::string_view text,
                                             std::string_view origin);

struct CatalogLoad {
  pmu::Catalog catalog;
  std::size_t base_count = 0;
  std::size_t augment_count = 0;
};

// Throws ParseError (with line and offset) or DuplicateEvent.
CatalogLoad LoadEventCatalog(
    const std::filesystem::path& path,
    const std::optional<std::filesystem::path>& augment = std::nullopt);

// Declarative stand-in for "compiles and runs on the target machine".
struct InstructionFilter {
  std::set<std::string> allow_extensions;  // empty allows all
  std::set<std::string> deny_extensions;
  std::vector<std::string> deny_asm_substrings;

  bool Accepts(const isa::InstrRecord& record) const;
};

InstructionFilter ParseFilter(std::string_view json_text);
InstructionFilter LoadFilter(const std::filesystem::path& path);

struct XmlLoad {
  std::vector<isa::InstrRecord> records;
  // Attributes present in the file that the loader does not use.
  std::size_t ignored_attributes = 0;
};

// Reads every <instruction asm="..." extension="..."/> element, at any depth.
XmlLoad ParseInstructionXml(std::string_view xml, std::string_view origin);
XmlLoad ReadInstructionXml(const std::filesystem::path& path);

struct InstructionLoad {
  std::vector<isa::InstrClass> classes;
  std::size_t raw_count = 0;
  std::size_t filtered_count = 0;
  std::size_t ignored_attributes = 0;
};

// Filters then classifies. Survivors sharing an asm string get " #2", " #3",
// ... appended to keep ids unique.
InstructionLoad LoadInstructionSet(const std::filesystem::path& path,
                                   const InstructionFilter& filter,
                                   const isa::ClassifyConfig& config,
                                   const isa::ExplicitMapping* mapping = nullptr);

isa::InstructionSet ToInstructionSet(const std::vector<isa::InstrClass>& classes);

struct DataPaths {
  std::filesystem::path catalog;
  std::optional<std::filesystem::path> augment;
  std::filesystem::path instructions;
  std::optional<std::filesystem::path> filter;
  std::optional<std::filesystem::path> mapping;
};

struct PlatformLoad {
  std::shared_ptr<const pmu::Platform> platform;
  std::size_t base_events = 0;
  std::size_t augment_events = 0;
  std::size_t raw_instructions = 0;
  std::size_t filtered_instructions = 0;
  std::size_t ignored_attributes = 0;
};

// Loads catalog and instructions and binds them. The synthetic signature
// universe is the catalog's instruction-tagged events.
PlatformLoad LoadPlatform(const DataPaths& paths, uint64_t seed,
                          double attach_probability);

}  // namespace pmuspill::ingest

#endif  // PMUSPILL_INGEST_H_
