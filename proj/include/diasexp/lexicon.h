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

// The indicator vocabulary: prefix tables, adverb/adjective/possession word
// lists, forms of "a fi", inflectional ending tables and the verb-group
// particles used to find the predicate.
//
// Lexicon files are line based:
//
//   # comment
//   [pref_where]
//   în mijlocul
//
// Multiword entries are only allowed in pref_* tables. Entries are stored in
// canonical lowercase form and matched on folded keys.

#ifndef DIASEXP_LEXICON_H_
#define DIASEXP_LEXICON_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/textnorm.h"

namespace diasexp {

enum class Table {
  kPrefAttrib,
  kPrefDo,
  kPrefIo,
  kPrefWhere,
  kPrefWhen,
  kPrefHow,
  kPrefGoal,
  kPrefWhy,
  kAdvWhere,
  kAdvWhen,
  kAdvHow,
  kAdjectives,
  kPossessionWords,
  kFormsOfToBe,
  kTPos,
  kTDo,
  kTIo,
  kAuxiliaries,
  kClitics,
  kNegations,
  kVerbEndings,
  kNounBases,
};

inline constexpr std::size_t kNumTables = 22;

std::string_view TableName(Table t);
std::optional<Table> ParseTable(std::string_view name);
bool IsPrefixTable(Table t);
bool IsEndingTable(Table t);

enum class EntrySource { kBuiltin, kUserFile, kLearned };

std::string_view SourceName(EntrySource s);
std::optional<EntrySource> ParseSource(std::string_view name);

struct LexiconDelta {
  Table table;
  std::string entry;
  EntrySource source = EntrySource::kLearned;
  bool operator==(const LexiconDelta &) const = default;
};

// Result of a prefix lookup. tables holds every prefix table containing the
// matched phrase, in enum order; the first one is the primary reading.
struct PrefixMatch {
  std::vector<Table> tables;
  int length = 0;
  std::string entry;

  Table table() const { return tables.front(); }
  bool has(Table t) const;
};

class Lexicon {
 public:
  // Empty lexicon; use Builtin() or Load() for the default vocabulary.
  Lexicon() = default;

  static const Lexicon &Builtin();

  // Builtin tables plus the union of all file entries. Throws ParseError or
  // UnknownTable.
  static Lexicon Load(std::span<const std::filesystem::path> paths);

  // Loads all *.lex files of a directory, sorted by name.
  static Lexicon LoadDirectory(const std::filesystem::path &dir);

  // Parses lexicon text into this lexicon. name is used in error messages.
  void Merge(std::string_view text, const std::string &name);

  // Returns a copy with delta applied. Learned entries are appended to the
  // learned file when one is set. Throws ParseError on an empty entry.
  Lexicon AddEntry(const LexiconDelta &delta) const;

  // Single-word membership on folded keys.
  bool Contains(Table t, std::string_view word) const;

  // Longest match of any prefix table starting at tokens[at]. Phrases never
  // cross punctuation. Exact (diacritic) matches beat folded ones at equal
  // length.
  std::optional<PrefixMatch> MatchPrefix(std::span<const Token> tokens,
                                         std::size_t at) const;

  const std::set<std::string> &entries(Table t) const {
    return tables_[static_cast<std::size_t>(t)];
  }

  std::size_t size() const;

  // Canonical text form, accepted by Merge().
  std::string Serialize() const;

  void set_learned_path(std::filesystem::path p) { learned_path_ = std::move(p); }
  const std::filesystem::path &learned_path() const { return learned_path_; }

  bool operator==(const Lexicon &other) const {
    return tables_ == other.tables_;
  }

 private:
  void Insert(Table t, const std::string &entry, const std::string &file,
              int line);

  std::array<std::set<std::string>, kNumTables> tables_;
  // Folded key -> tables containing it.
  std::map<std::string, std::set<Table>> folded_;
  std::filesystem::path learned_path_;
};

}  // namespace diasexp

#endif  // DIASEXP_LEXICON_H_
