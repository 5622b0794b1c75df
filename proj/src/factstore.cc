// Copyright 2026 The DIASEXP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diasexp/factstore.h"

#include <fstream>
#include <sstream>

#include "diasexp/error.h"
#include "diasexp/qa.h"
#include "diasexp/textnorm.h"
#include "json.hpp"

namespace diasexp {

using json = nlohmann::ordered_json;

void SentenceRecord::set(Role r, std::string text, std::string trigger,
                         std::optional<TokenRange> range) {
  Field f;
  f.folded = FoldPhrase(text);
  f.text = std::move(text);
  f.trigger = std::move(trigger);
  f.range = range;
  fields[Index(r)] = std::move(f);
}

Story::Story(std::string name) : name_(std::move(name)) {
  if (name_.empty()) name_ = "story";
}

std::int64_t Story::Append(SentenceRecord record) {
  record.seq = records_.empty() ? 1 : records_.back().seq + 1;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    out << SerializeRecord(record) << '\n';
    out.flush();
    if (!out) throw StorageError("cannot append to " + path_.string());
  }
  records_.push_back(std::move(record));
  return records_.back().seq;
}

bool FieldMatches(const SentenceRecord &rec, Role role, std::string_view value) {
  if (!rec.has(role)) return false;
  if (role == Role::kPredicate) {
    return SamePredicateHead(rec.get(role)->text, value);
  }
  return rec.get(role)->folded == FoldPhrase(value);
}

std::vector<const SentenceRecord *> Story::Query(
    const std::map<Role, std::string> &constraints) const {
  std::vector<const SentenceRecord *> out;
  for (const SentenceRecord &rec : records_) {
    bool ok = true;
    for (const auto &[role, value] : constraints) {
      if (!FieldMatches(rec, role, value)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(&rec);
  }
  return out;
}

namespace {

json RecordJson(const SentenceRecord &rec) {
  json j;
  j["type"] = "record";
  j["seq"] = rec.seq;
  j["raw"] = rec.raw;
  j["predicative"] = rec.predicative;
  json folded = json::object(), triggers = json::object(), ranges = json::object();
  for (Role r : kAllRoles) {
    std::string name(FieldName(r));
    if (!rec.has(r)) {
      j[name] = nullptr;
      continue;
    }
    const Field &f = *rec.get(r);
    j[name] = f.text;
    folded[name] = f.folded;
    if (!f.trigger.empty()) triggers[name] = f.trigger;
    if (f.range) ranges[name] = {f.range->first, f.range->last};
  }
  j["folded"] = folded;
  j["triggers"] = triggers;
  j["ranges"] = ranges;
  return j;
}

SentenceRecord RecordFromJson(const json &j, std::size_t offset) {
  SentenceRecord rec;
  json folded = json::object(), triggers = json::object(), ranges = json::object();
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string &key = it.key();
    const json &v = it.value();
    if (key == "type") continue;
    if (key == "seq") {
      if (!v.is_number_integer()) throw StorageError("seq is not an integer", offset);
      rec.seq = v.get<std::int64_t>();
    } else if (key == "raw") {
      if (!v.is_string()) throw StorageError("raw is not a string", offset);
      rec.raw = v.get<std::string>();
    } else if (key == "predicative") {
      if (!v.is_boolean()) throw StorageError("predicative is not a boolean", offset);
      rec.predicative = v.get<bool>();
    } else if (key == "folded" || key == "triggers" || key == "ranges") {
      if (!v.is_object()) throw StorageError(key + " is not an object", offset);
      (key == "folded" ? folded : key == "triggers" ? triggers : ranges) = v;
    } else if (auto role = ParseRole(key); role && key == FieldName(*role)) {
      if (v.is_null()) continue;
      if (!v.is_string()) throw StorageError(key + " is not a string", offset);
      rec.set(*role, v.get<std::string>());
    } else {
      throw FormatVersionError("unknown record field \"" + key + "\"");
    }
  }
  for (Role r : kAllRoles) {
    std::string name(FieldName(r));
    if (!rec.has(r)) continue;
    Field &f = rec.fields[Index(r)].value();
    if (folded.contains(name)) f.folded = folded[name].get<std::string>();
    if (triggers.contains(name)) f.trigger = triggers[name].get<std::string>();
    if (ranges.contains(name)) {
      const json &rg = ranges[name];
      if (!rg.is_array() || rg.size() != 2) {
        throw StorageError("bad range for " + name, offset);
      }
      f.range = TokenRange{rg[0].get<std::size_t>(), rg[1].get<std::size_t>()};
    }
  }
  if (!rec.has(Role::kPredicate)) {
    throw StorageError("record without predicate", offset);
  }
  return rec;
}

std::string Dump(const json &j) {
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

}  // namespace

std::string SerializeRecord(const SentenceRecord &rec) {
  return Dump(RecordJson(rec));
}

std::string SerializeStory(const Story &story) {
  std::string out;
  json header;
  header["format"] = "diasexp-story";
  header["version"] = kStoryFormatVersion;
  header["name"] = story.name();
  out += Dump(header) + "\n";
  for (const auto &[key, role] : story.memory().entries()) {
    json m;
    m["type"] = "memory";
    m["key"] = key;
    m["role"] = FieldName(role);
    out += Dump(m) + "\n";
  }
  for (const LexiconDelta &d : story.lexicon_deltas()) {
    json l;
    l["type"] = "lexicon";
    l["table"] = TableName(d.table);
    l["entry"] = d.entry;
    l["source"] = SourceName(d.source);
    out += Dump(l) + "\n";
  }
  for (const SentenceRecord &rec : story.records()) {
    out += SerializeRecord(rec) + "\n";
  }
  return out;
}

Story ParseStory(std::string_view text) {
  std::size_t pos = 0;
  bool have_header = false;
  Story story;
  std::int64_t last_seq = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    bool terminated = nl != std::string_view::npos;
    std::string_view line = text.substr(pos, terminated ? nl - pos : text.size() - pos);
    std::size_t offset = pos;
    pos = terminated ? nl + 1 : text.size();
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw StorageError(terminated ? std::string("malformed line: ") + e.what()
                                    : std::string("truncated story file"),
                         offset);
    }
    if (!j.is_object()) throw StorageError("line is not an object", offset);

    if (!have_header) {
      if (!j.contains("format") || j["format"] != "diasexp-story") {
        throw StorageError("missing story header", offset);
      }
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "format" && it.key() != "version" && it.key() != "name") {
          throw FormatVersionError("unknown header field \"" + it.key() + "\"");
        }
      }
      if (!j.contains("version") || !j["version"].is_number_integer()) {
        throw StorageError("missing format version", offset);
      }
      int version = j["version"].get<int>();
      if (version != kStoryFormatVersion) {
        throw FormatVersionError("unsupported story format version " +
                                 std::to_string(version));
      }
      std::string name = j.value("name", std::string("story"));
      story = Story(name);
      have_header = true;
      continue;
    }

    std::string type = j.value("type", std::string());
    if (type == "record") {
      SentenceRecord rec = RecordFromJson(j, offset);
      if (rec.seq <= last_seq) throw StorageError("seq not increasing", offset);
      last_seq = rec.seq;
      story.Restore(std::move(rec));
    } else if (type == "memory") {
      auto role = ParseRole(j.value("role", std::string()));
      if (!role || !j.contains("key")) throw StorageError("bad memory line", offset);
      story.memory().Learn(j["key"].get<std::string>(), *role);
    } else if (type == "lexicon") {
      auto table = ParseTable(j.value("table", std::string()));
      auto source = ParseSource(j.value("source", std::string("learned")));
      if (!table) throw UnknownTable(j.value("table", std::string()));
      if (!source || !j.contains("entry")) throw StorageError("bad lexicon line", offset);
      story.lexicon_deltas().push_back({*table, j["entry"].get<std::string>(), *source});
    } else {
      throw FormatVersionError("unknown line type \"" + type + "\"");
    }
  }
  if (!have_header) throw StorageError("empty story file", 0);
  return story;
}

void SaveStory(const Story &story, const std::filesystem::path &path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SerializeStory(story);
    out.flush();
    if (!out) throw StorageError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StorageError("cannot write " + path.string() + ": " + ec.message());
}

Story LoadStory(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return ParseStory(text);
}

void SaveMemory(const ResolutionMemory &mem, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const auto &[key, role] : mem.entries()) {
    out << key << '\t' << FieldName(role) << '\n';
  }
  if (!out) throw StorageError("cannot write " + path.string());
}

ResolutionMemory LoadMemory(const std::filesystem::path &path) {
  ResolutionMemory mem;
  std::ifstream in(path, std::ios::binary);
  if (!in) return mem;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t tab = line.find('\t');
    if (!line.empty()) {
      auto role = tab == std::string::npos ? std::nullopt : ParseRole(line.substr(tab + 1));
      if (!role) throw StorageError("bad memory line in " + path.string(), offset);
      mem.Learn(line.substr(0, tab), *role);
    }
    offset += line.size() + 1;
  }
  return mem;
}

}  // namespace diasexp
