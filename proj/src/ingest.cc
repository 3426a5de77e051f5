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

#include "pmuspill/ingest.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pmuspill/errors.h"

namespace pmuspill::ingest {

namespace {

using nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Position {
  std::size_t line = 1;
  std::size_t offset = 0;
};

Position PositionOf(std::string_view text, std::size_t byte) {
  Position p;
  p.offset = byte;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++p.line;
  }
  return p;
}

// Byte offset where the index-th element of the top-level array starts.
std::size_t ElementStart(std::string_view text, std::size_t index) {
  int depth = 0;
  bool in_string = false;
  std::size_t seen = 0;
  bool expecting = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (depth == 1 && expecting && !std::isspace(static_cast<unsigned char>(c))) {
      if (seen == index) return i;
      ++seen;
      expecting = false;
    }
    switch (c) {
      case '"': in_string = true; break;
      case '[':
      case '{':
        ++depth;
        if (depth == 1) expecting = true;
        break;
      case ']':
      case '}': --depth; break;
      case ',':
        if (depth == 1) expecting = true;
        break;
      default: break;
    }
  }
  return 0;
}

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const json* Field(const json& obj, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    auto it = obj.find(key);
    if (it != obj.end() && !it->is_null()) return &*it;
  }
  return nullptr;
}

std::string StringField(const json& obj, std::initializer_list<const char*> keys,
                        std::string fallback = "") {
  const json* v = Field(obj, keys);
  if (v == nullptr) return fallback;
  if (!v->is_string()) {
    throw RecordError(std::string(*keys.begin()) + " must be a string");
  }
  return v->get<std::string>();
}

uint8_t ByteField(const json& obj, std::initializer_list<const char*> keys,
                  bool required) {
  const json* v = Field(obj, keys);
  const std::string key = *keys.begin();
  if (v == nullptr) {
    if (required) throw RecordError("missing " + key);
    return 0;
  }
  uint64_t value = 0;
  if (v->is_number_unsigned()) {
    value = v->get<uint64_t>();
  } else if (v->is_string()) {
    std::string_view s = v->get_ref<const std::string&>();
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      s.remove_prefix(2);
      base = 16;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw RecordError(key + " '" + v->get<std::string>() +
                        "' is not a number");
    }
  } else {
    throw RecordError(key + " must be a hex string or integer");
  }
  if (value > 0xff) {
    throw RecordError(key + " " + v->dump() + " exceeds 8 bits");
  }
  return static_cast<uint8_t>(value);
}

bool FlagField(const json& obj, std::initializer_list<const char*> keys) {
  const json* v = Field(obj, keys);
  if (v == nullptr) return false;
  if (v->is_boolean()) return v->get<bool>();
  return ByteField(obj, keys, false) != 0;
}

pmu::EventDef ToEvent(const json& rec) {
  if (!rec.is_object()) throw RecordError("event record must be an object");
  pmu::EventDef e;
  e.name = StringField(rec, {"name", "EventName"});
  if (e.name.empty()) throw RecordError("missing name");
  e.category = StringField(rec, {"category", "Category"},
                           e.name.substr(0, e.name.find('.')));
  e.description = StringField(rec, {"description", "BriefDescription"});
  e.event_code = ByteField(rec, {"event_code", "EventCode"}, true);
  e.umask = ByteField(rec, {"umask", "UMask"}, true);
  e.counter_mask = ByteField(rec, {"counter_mask", "CounterMask"}, false);
  e.invert = FlagField(rec, {"invert", "Invert"});
  e.edge_detect = FlagField(rec, {"edge_detect", "EdgeDetect"});

  if (const json* t = Field(rec, {"trigger"})) {
    if (!t->is_object() || t->size() != 1) {
      throw RecordError("trigger must hold exactly one of structural, instructions");
    }
    if (auto it = t->find("structural"); it != t->end()) {
      if (!it->is_string()) throw RecordError("structural kind must be a string");
      auto kind = pmu::ParseStructural(it->get<std::string>());
      if (!kind) {
        throw RecordError("unknown structural kind '" +
                          it->get<std::string>() + "'");
      }
      e.trigger = pmu::StructuralTrigger{*kind};
    } else if (auto it2 = t->find("instructions"); it2 != t->end()) {
      if (!it2->is_array() || it2->empty()) {
        throw RecordError("instructions must be a non-empty array");
      }
      pmu::TaggedTrigger tagged;
      for (const auto& id : *it2) {
        if (!id.is_string()) throw RecordError("instruction ids must be strings");
        tagged.instructions.push_back(id.get<std::string>());
      }
      e.trigger = std::move(tagged);
    } else {
      throw RecordError("trigger must hold structural or instructions");
    }
  }
  const std::string persistence =
      StringField(rec, {"persistence"}, "RETIREMENT_COUNTED");
  auto p = pmu::ParsePersistence(persistence);
  if (!p) throw RecordError("unknown persistence '" + persistence + "'");
  e.persistence = *p;
  if (const json* b = Field(rec, {"baseline"})) {
    if (!b->is_number_unsigned() || b->get<uint64_t>() > UINT32_MAX) {
      throw RecordError("baseline must be a non-negative integer");
    }
    e.baseline = b->get<uint32_t>();
  }
  return e;
}

}  // namespace

std::vector<pmu::EventDef> ParseEventCatalog(std::string_view text,
                                             std::string_view origin) {
  std::vector<pmu::EventDef> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto pos = PositionOf(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string(origin) + ": " + e.what(), pos.line, pos.offset);
  }
  if (!root.is_array()) {
    throw ParseError(std::string(origin) + ": catalog must be a JSON array", 1, 0);
  }
  for (std::size_t i = 0; i < root.size(); ++i) {
    try {
      pmu::EventDef e = ToEvent(root[i]);
      e.provenance = std::string(origin) + "#" + std::to_string(i);
      out.push_back(std::move(e));
    } catch (const RecordError& err) {
      const auto pos = PositionOf(text, ElementStart(text, i));
      throw ParseError(std::string(origin) + ": record " + std::to_string(i) +
                           ": " + err.what(),
                       pos.line, pos.offset);
    }
  }
  return out;
}

CatalogLoad LoadEventCatalog(const std::filesystem::path& path,
                             const std::optional<std::filesystem::path>& augment) {
  CatalogLoad load;
  for (auto& e : ParseEventCatalog(ReadFile(path), path.filename().string())) {
    load.catalog.Add(std::move(e));
    ++load.base_count;
  }
  if (augment) {
    for (auto& e : ParseEventCatalog(ReadFile(*augment),
                                     augment->filename().string())) {
      load.catalog.Add(std::move(e));
      ++load.augment_count;
    }
  }
  return load;
}

bool InstructionFilter::Accepts(const isa::InstrRecord& record) const {
  if (!allow_extensions.empty() && !allow_extensions.contains(record.extension)) {
    return false;
  }
  if (deny_extensions.contains(record.extension)) return false;
  for (const auto& s : deny_asm_substrings) {
    if (record.asm_text.find(s) != std::string::npos) return false;
  }
  return true;
}

InstructionFilter ParseFilter(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const auto pos = PositionOf(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("filter: ") + e.what(), pos.line, pos.offset);
  }
  if (!root.is_object()) throw ParseError("filter must be a JSON object", 1, 0);
  InstructionFilter f;
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    auto it = root.find(key);
    if (it == root.end()) return out;
    if (!it->is_array()) throw ParseError(std::string("filter: ") + key + " must be an array");
    for (const auto& v : *it) {
      if (!v.is_string()) throw ParseError(std::string("filter: ") + key + " holds a non-string");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  for (auto& s : strings("allow_extensions")) f.allow_extensions.insert(s);
  for (auto& s : strings("deny_extensions")) f.deny_extensions.insert(s);
  f.deny_asm_substrings = strings("deny_asm_substrings");
  for (const auto& [key, value] : root.items()) {
    if (key != "allow_extensions" && key != "deny_extensions" &&
        key != "deny_asm_substrings" && key != "comment") {
      throw ParseError("filter: unknown key '" + key + "'");
    }
  }
  return f;
}

InstructionFilter LoadFilter(const std::filesystem::path& path) {
  return ParseFilter(ReadFile(path));
}

namespace {

namespace pt = boost::property_tree;

void Walk(const pt::ptree& node, std::string_view origin, XmlLoad& out) {
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    if (tag == "instruction") {
      isa::InstrRecord record;
      if (auto attrs = child.get_child_optional("<xmlattr>")) {
        for (const auto& [name, value] : *attrs) {
          if (name == "asm") {
            record.asm_text = value.data();
          } else if (name == "extension") {
            record.extension = value.data();
          } else {
            ++out.ignored_attributes;
          }
        }
      }
      if (record.asm_text.empty()) {
        throw ParseError(std::string(origin) + ": instruction " +
                         std::to_string(out.records.size()) + " has no asm");
      }
      record.provenance =
          std::string(origin) + "#" + std::to_string(out.records.size());
      out.records.push_back(std::move(record));
      continue;
    }
    Walk(child, origin, out);
  }
}

}  // namespace

XmlLoad ParseInstructionXml(std::string_view xml, std::string_view origin) {
  XmlLoad out;
  if (xml.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  pt::ptree tree;
  std::istringstream in{std::string(xml)};
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(std::string(origin) + ": " + e.message(), e.line(), 0);
  }
  Walk(tree, origin, out);
  return out;
}

XmlLoad ReadInstructionXml(const std::filesystem::path& path) {
  return ParseInstructionXml(ReadFile(path), path.filename().string());
}

InstructionLoad LoadInstructionSet(const std::filesystem::path& path,
                                   const InstructionFilter& filter,
                                   const isa::ClassifyConfig& config,
                                   const isa::ExplicitMapping* mapping) {
  XmlLoad xml = ReadInstructionXml(path);
  InstructionLoad load;
  load.raw_count = xml.records.size();
  load.ignored_attributes = xml.ignored_attributes;
  std::map<std::string, int> seen;
  for (auto& record : xml.records) {
    if (!filter.Accepts(record)) continue;
    const int n = ++seen[record.asm_text];
    if (n > 1) record.asm_text += " #" + std::to_string(n);
    load.classes.push_back(isa::Classify(record, mapping, config));
  }
  load.filtered_count = load.classes.size();
  return load;
}

isa::InstructionSet ToInstructionSet(const std::vector<isa::InstrClass>& classes) {
  isa::InstructionSet iset;
  for (const auto& c : classes) iset.Add(c);
  return iset;
}

PlatformLoad LoadPlatform(const DataPaths& paths, uint64_t seed,
                          double attach_probability) {
  CatalogLoad catalog = LoadEventCatalog(paths.catalog, paths.augment);
  InstructionFilter filter;
  if (paths.filter) filter = LoadFilter(*paths.filter);
  isa::ExplicitMapping mapping;
  if (paths.mapping) mapping = isa::LoadMapping(*paths.mapping);
  isa::ClassifyConfig config;
  config.seed = seed;
  config.attach_probability = attach_probability;
  config.tagged_events = catalog.catalog.TaggedEventNames();
  InstructionLoad instructions =
      LoadInstructionSet(paths.instructions, filter, config,
                         paths.mapping ? &mapping : nullptr);
  PlatformLoad out;
  out.base_events = catalog.base_count;
  out.augment_events = catalog.augment_count;
  out.raw_instructions = instructions.raw_count;
  out.filtered_instructions = instructions.filtered_count;
  out.ignored_attributes = instructions.ignored_attributes;
  out.platform = std::make_shared<const pmu::Platform>(
      ToInstructionSet(instructions.classes), std::move(catalog.catalog));
  return out;
}

}  // namespace pmuspill::ingest
