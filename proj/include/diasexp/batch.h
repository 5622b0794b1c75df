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

// Non-interactive analysis of a sentence file, optionally scored against
// hand-made gold records.
//
// Gold file: one JSON object per line with "raw" and any of the twelve
// field names; "exclude" lists fields left out of scoring and "note" is
// free text. Choices file: "<words>\t<field name>" lines answering
// clarifications about those words; unanswered clarifications are deferred
// and the words stay unassigned.

#ifndef DIASEXP_BATCH_H_
#define DIASEXP_BATCH_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/analyzer.h"
#include "diasexp/factstore.h"
#include "diasexp/lexicon.h"
#include "diasexp/record.h"

namespace diasexp {

struct GoldRow {
  std::string raw;
  SentenceRecord record;
  std::set<Role> exclude;
  std::string note;
};

// Throws StorageError or FormatVersionError (unknown field name).
std::vector<GoldRow> ParseGold(std::string_view text);
std::vector<GoldRow> LoadGold(const std::filesystem::path &path);

// Folded words -> role.
using Choices = std::map<std::string, Role>;
Choices ParseChoices(std::string_view text);
Choices LoadChoices(const std::filesystem::path &path);

// Sentence file lines, blank lines and "#" comments dropped.
std::vector<std::string> LoadSentences(const std::filesystem::path &path);

struct FieldStats {
  int gold = 0;       // gold cells filled
  int predicted = 0;  // predicted cells filled
  int correct = 0;    // filled and equal
};

struct Mismatch {
  std::size_t row;
  Role role;
  std::string got, want;
};

struct BatchRow {
  std::string raw;
  std::optional<SentenceRecord> record;
  std::string error;
  int clarifications = 0;
  int deferred = 0;
  std::optional<std::size_t> gold;  // index into the gold rows
};

struct BatchReport {
  std::vector<BatchRow> rows;
  std::array<FieldStats, kNumRoles> fields{};
  int scored_rows = 0;
  int all_cells = 0, all_correct = 0;        // every non-excluded cell
  int filled_cells = 0, filled_correct = 0;  // cells filled in gold or output
  std::vector<Mismatch> mismatches;
  double seconds = 0;

  double all_accuracy() const {
    return all_cells ? static_cast<double>(all_correct) / all_cells : 0.0;
  }
  double filled_accuracy() const {
    return filled_cells ? static_cast<double>(filled_correct) / filled_cells : 0.0;
  }
  std::string Format() const;
};

struct BatchOptions {
  const std::vector<GoldRow> *gold = nullptr;
  const Choices *choices = nullptr;
  Story *story = nullptr;  // receives the records when set
};

// mem is updated with every scripted choice.
BatchReport BatchAnalyze(const std::vector<std::string> &sentences,
                         const Lexicon &lex, ResolutionMemory &mem,
                         const BatchOptions &options = {});

}  // namespace diasexp

#endif  // DIASEXP_BATCH_H_
