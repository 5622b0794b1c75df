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

#include "diasexp/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "diasexp/error.h"

namespace diasexp {

namespace internal {
extern const std::string_view kBuiltinLexicon;
}  // namespace internal

namespace {

constexpr std::array<std::string_view, kNumTables> kTableNames = {
    "pref_attrib",  "pref_do",          "pref_io",        "pref_where",
    "pref_when",    "pref_how",         "pref_goal",      "pref_why",
    "adv_where",    "adv_when",         "adv_how",        "adjectives",
    "possession_words", "forms_of_to_be", "t_pos",        "t_do",
    "t_io",         "auxiliaries",      "clitics",        "negations",
    "verb_endings", "noun_bases",
};

constexpr std::size_t kMaxPhraseWords = 4;

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t WordCount(std::string_view s) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : s) {
    if (c == ' ') {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

}  // namespace

std::string_view TableName(Table t) {
  return kTableNames[static_cast<std::size_t>(t)];
}

std::optional<Table> ParseTable(std::string_view name) {
  for (std::size_t i = 0; i < kNumTables; ++i) {
    if (kTableNames[i] == name) return static_cast<Table>(i);
  }
  return std::nullopt;
}

bool IsPrefixTable(Table t) {
  return static_cast<int>(t) <= static_cast<int>(Table::kPrefWhy);
}

bool IsEndingTable(Table t) {
  return t == Table::kTPos || t == Table::kTDo || t == Table::kTIo;
}

std::string_view SourceName(EntrySource s) {
  switch (s) {
    case EntrySource::kBuiltin: return "builtin";
    case EntrySource::kUserFile: return "user-file";
    case EntrySource::kLearned: return "learned";
  }
  return "builtin";
}

std::optional<EntrySource> ParseSource(std::string_view name) {
  if (name == "builtin") return EntrySource::kBuiltin;
  if (name == "user-file") return EntrySource::kUserFile;
  if (name == "learned") return EntrySource::kLearned;
  return std::nullopt;
}

bool PrefixMatch::has(Table t) const {
  return std::find(tables.begin(), tables.end(), t) != tables.end();
}

const Lexicon &Lexicon::Builtin() {
  static const Lexicon builtin = [] {
    Lexicon lex;
    lex.Merge(internal::kBuiltinLexicon, "<builtin>");
    return lex;
  }();
  return builtin;
}

Lexicon Lexicon::Load(std::span<const std::filesystem::path> paths) {
  Lexicon lex = Builtin();
  for (const auto &path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    lex.Merge(buffer.str(), path.string());
  }
  return lex;
}

Lexicon Lexicon::LoadDirectory(const std::filesystem::path &dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto &entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lex") {
      files.push_back(entry.path());
    }
  }
  if (ec) throw ParseError(dir.string(), 0, "cannot read directory");
  std::sort(files.begin(), files.end());
  return Load(files);
}

void Lexicon::Merge(std::string_view text, const std::string &name) {
  std::optional<Table> current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(name, line_no, "unterminated section header");
      }
      std::string table = Trim(std::string_view(line).substr(1, line.size() - 2));
      current = ParseTable(table);
      if (!current) throw UnknownTable(table);
      continue;
    }
    if (!current) throw ParseError(name, line_no, "entry outside of a section");
    Insert(*current, line, name, line_no);
  }
}

void Lexicon::Insert(Table t, const std::string &entry,
                     const std::string &file, int line) {
  std::string canonical = Lower(Normalize(entry).canonical);
  if (canonical.empty()) throw ParseError(file, line, "empty entry");
  std::size_t words = WordCount(canonical);
  if (words > 1 && !IsPrefixTable(t)) {
    throw ParseError(file, line,
                     "multiword entry in table " + std::string(TableName(t)));
  }
  if (words > kMaxPhraseWords) {
    throw ParseError(file, line, "entry longer than 4 words");
  }
  tables_[static_cast<std::size_t>(t)].insert(canonical);
  folded_[FoldPhrase(canonical)].insert(t);
}

Lexicon Lexicon::AddEntry(const LexiconDelta &delta) const {
  Lexicon copy = *this;
  copy.Insert(delta.table, delta.entry, "", 0);
  if (delta.source == EntrySource::kLearned && !learned_path_.empty() &&
      !(copy == *this)) {
    std::ofstream out(learned_path_, std::ios::app | std::ios::binary);
    out << "[" << TableName(delta.table) << "]\n"
        << Lower(Normalize(delta.entry).canonical) << "\n";
  }
  return copy;
}

bool Lexicon::Contains(Table t, std::string_view word) const {
  const auto &entries = tables_[static_cast<std::size_t>(t)];
  std::string lowered = Lower(word);
  if (entries.count(lowered)) return true;
  auto it = folded_.find(Fold(word));
  return it != folded_.end() && it->second.count(t) > 0;
}

std::optional<PrefixMatch> Lexicon::MatchPrefix(std::span<const Token> tokens,
                                                std::size_t at) const {
  if (at >= tokens.size() || !tokens[at].is_word()) return std::nullopt;
  std::size_t max_len = 0;
  while (max_len < kMaxPhraseWords && at + max_len < tokens.size() &&
         tokens[at + max_len].is_word()) {
    ++max_len;
  }
  for (std::size_t len = max_len; len >= 1; --len) {
    std::string lowered, folded;
    for (std::size_t i = at; i < at + len; ++i) {
      if (i > at) {
        lowered += ' ';
        folded += ' ';
      }
      lowered += Lower(tokens[i].surface);
      folded += tokens[i].folded;
    }
    PrefixMatch match;
    match.length = static_cast<int>(len);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(Table::kPrefWhy); ++t) {
      if (tables_[t].count(lowered)) match.tables.push_back(static_cast<Table>(t));
    }
    if (!match.tables.empty()) {
      match.entry = lowered;
      return match;
    }
    auto it = folded_.find(folded);
    if (it != folded_.end()) {
      for (Table t : it->second) {
        if (IsPrefixTable(t)) match.tables.push_back(t);
      }
      if (!match.tables.empty()) {
        std::sort(match.tables.begin(), match.tables.end());
        match.entry = lowered;
        return match;
      }
    }
  }
  return std::nullopt;
}

std::size_t Lexicon::size() const {
  std::size_t n = 0;
  for (const auto &t : tables_) n += t.size();
  return n;
}

std::string Lexicon::Serialize() const {
  std::string out;
  for (std::size_t t = 0; t < kNumTables; ++t) {
    if (tables_[t].empty()) continue;
    if (!out.empty()) out += '\n';
    out += "[";
    out += kTableNames[t];
    out += "]\n";
    for (const auto &e : tables_[t]) {
      out += e;
      out += '\n';
    }
  }
  return out;
}

}  // namespace diasexp
