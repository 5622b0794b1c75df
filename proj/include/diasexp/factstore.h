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

// Stories: ordered, append-only lists of sentence records with the
// clarification memory and lexicon additions made while telling them.
//
// File format, one JSON object per line:
//
//   {"format":"diasexp-story","version":1,"name":"gold"}
//   {"type":"record","seq":1,"raw":"...","predicative":true,
//    "subject":"Elena",...,"why":"deoarece ...","triggers":{...}}
//   {"type":"memory","key":"ending:ilor|dir_obj|0","role":"indir_obj"}
//   {"type":"lexicon","table":"adv_how","entry":"politicos","source":"learned"}

#ifndef DIASEXP_FACTSTORE_H_
#define DIASEXP_FACTSTORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/analyzer.h"
#include "diasexp/lexicon.h"
#include "diasexp/record.h"
#include "diasexp/roles.h"

namespace diasexp {

inline constexpr int kStoryFormatVersion = 1;

class Story {
 public:
  explicit Story(std::string name = "story");

  const std::string &name() const { return name_; }
  const std::vector<SentenceRecord> &records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Assigns the next seq and returns it. When the story is bound to a file
  // the record line is written and flushed before returning. Throws
  // StorageError.
  std::int64_t Append(SentenceRecord record);

  // Adds a record that already carries its seq (loading). Not persisted.
  void Restore(SentenceRecord record) { records_.push_back(std::move(record)); }

  // Records whose constrained fields all match, in story order. Predicate
  // constraints compare head verbs; everything else compares folded text.
  std::vector<const SentenceRecord *> Query(
      const std::map<Role, std::string> &constraints) const;

  ResolutionMemory &memory() { return memory_; }
  const ResolutionMemory &memory() const { return memory_; }
  std::vector<LexiconDelta> &lexicon_deltas() { return deltas_; }
  const std::vector<LexiconDelta> &lexicon_deltas() const { return deltas_; }

  // Subsequent appends also go to path, which must already hold this
  // story (see Save).
  void Bind(std::filesystem::path path) { path_ = std::move(path); }
  const std::filesystem::path &path() const { return path_; }

  bool operator==(const Story &other) const {
    return name_ == other.name_ && records_ == other.records_ &&
           memory_ == other.memory_ && deltas_ == other.deltas_;
  }

 private:
  std::string name_;
  std::vector<SentenceRecord> records_;
  ResolutionMemory memory_;
  std::vector<LexiconDelta> deltas_;
  std::filesystem::path path_;
};

// Folded field comparison used by queries.
bool FieldMatches(const SentenceRecord &rec, Role role, std::string_view value);

std::string SerializeRecord(const SentenceRecord &rec);
std::string SerializeStory(const Story &story);

// Throws StorageError (malformed or truncated input, with the byte offset of
// the offending line) or FormatVersionError (unknown version or field).
Story ParseStory(std::string_view text);

void SaveStory(const Story &story, const std::filesystem::path &path);
Story LoadStory(const std::filesystem::path &path);

// Standalone memory file: one "key<TAB>role" line per entry.
void SaveMemory(const ResolutionMemory &mem, const std::filesystem::path &path);
ResolutionMemory LoadMemory(const std::filesystem::path &path);

}  // namespace diasexp

#endif  // DIASEXP_FACTSTORE_H_
