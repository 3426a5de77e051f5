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

#include "pmuspill/classify.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pmuspill/errors.h"
#include "pmuspill/rng.h"

namespace pmuspill::isa {

namespace {

using nlohmann::json;

std::vector<SignatureEntry> ToSignature(const std::string& mnemonic,
                                        const json& value) {
  if (!value.is_array()) {
    throw ParseError("mapping for '" + mnemonic + "' must be an array");
  }
  std::vector<SignatureEntry> out;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_unsigned()) {
      throw ParseError("mapping for '" + mnemonic +
                       "' must hold [event, increment] pairs");
    }
    out.push_back({pair[0].get<std::string>(), pair[1].get<uint32_t>()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExplicitMapping ParseMapping(std::string_view json_text) {
  ExplicitMapping mapping;
  std::string current_key;
  // nlohmann keeps only the last value of a repeated key, so duplicates are
  // caught while parsing.
  json::parser_callback_t callback = [&](int depth, json::parse_event_t event,
                                         json& parsed) {
    if (depth == 1 && event == json::parse_event_t::key) {
      current_key = parsed.get<std::string>();
    } else if (depth == 1 && event == json::parse_event_t::array_end) {
      auto signature = ToSignature(current_key, parsed);
      auto [it, inserted] = mapping.emplace(current_key, signature);
      if (!inserted && it->second != signature) {
        throw MappingConflict("mnemonic '" + current_key +
                              "' mapped to two signatures");
      }
    }
    return true;
  };
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end(), callback);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mapping: ") + e.what(), 0, e.byte);
  }
  if (!root.is_object()) throw ParseError("mapping root must be an object");
  for (const auto& [key, value] : root.items()) {
    if (!mapping.contains(key)) ToSignature(key, value);  // reports bad shape
  }
  return mapping;
}

ExplicitMapping LoadMapping(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mapping file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseMapping(buffer.str());
}

InstrClass Classify(const InstrRecord& record, const ExplicitMapping* mapping,
                    const ClassifyConfig& config) {
  if (record.asm_text.empty()) {
    throw InvalidInstrClass("instruction record without a mnemonic");
  }
  InstrClass cls;
  cls.id = record.asm_text;
  cls.mnemonic = record.asm_text;
  cls.provenance = record.provenance;

  const uint64_t h = SplitMix64(config.seed ^ Fnv1a64(record.asm_text));
  cls.latency = 1 + static_cast<uint32_t>(SplitMix64(h ^ 0x1a7e) % 3);

  if (mapping != nullptr) {
    if (auto it = mapping->find(record.asm_text); it != mapping->end()) {
      cls.signature = it->second;
      cls.provenance += cls.provenance.empty() ? "mapping" : "+mapping";
      cls.kind = cls.signature.empty() ? Kind::kNop : Kind::kTrigger;
      return cls;
    }
  }
  if (!config.tagged_events.empty() && ToUnit(h) < config.attach_probability) {
    const uint64_t pick = SplitMix64(h) % config.tagged_events.size();
    cls.signature.push_back({config.tagged_events[pick], 1});
  }
  cls.kind = cls.signature.empty() ? Kind::kNop : Kind::kTrigger;
  return cls;
}

}  // namespace pmuspill::isa
