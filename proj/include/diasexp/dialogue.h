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

// The dialogue loop: assertions are analyzed and stored, questions are
// answered from the story, and ambiguous words are asked back. Shared by
// the REPL and the HTTP service.

#ifndef DIASEXP_DIALOGUE_H_
#define DIASEXP_DIALOGUE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/analyzer.h"
#include "diasexp/factstore.h"
#include "diasexp/lexicon.h"
#include "diasexp/record.h"

namespace diasexp {

struct ReplState {
  Story story;
  Lexicon lexicon = Lexicon::Builtin();
  ResolutionMemory memory;
  std::optional<AnalysisOutcome> pending;
  bool verbose = false;
  std::filesystem::path story_path;   // where /save writes; may be empty
  std::filesystem::path memory_path;  // global memory file; may be empty
};

enum class TurnKind { kRecorded, kAnswers, kClarify, kError };

struct TurnResult {
  TurnKind kind = TurnKind::kError;
  std::optional<SentenceRecord> record;
  std::vector<std::string> answers;
  std::optional<Clarification> clarification;
  std::string message;
  bool interrogative = false;
};

// Drops a transcript prefix ("A:", "I:", "Î:") and surrounding blanks.
std::string StripPrompt(std::string_view line);

// One sentence. Refused with an error while a clarification is pending.
TurnResult Say(ReplState &state, std::string_view text);

// Answers the pending clarification. Throws UnknownClarification (no such
// id pending) or InvalidChoice.
TurnResult Choose(ReplState &state, const std::string &id, Role choice);

// Choice by 1-based option number. Throws InvalidChoice when out of range.
TurnResult ChooseNumber(ReplState &state, const std::string &id, int n);

// Adds a lexicon entry for the rest of the session and records it in the
// story.
void AddLexiconEntry(ReplState &state, Table table, const std::string &entry);

// Loads a story, merging its memory and lexicon entries into the state.
void LoadInto(ReplState &state, const std::filesystem::path &path,
              bool bind = false);

// Writes the story with the current memory.
void SaveState(ReplState &state, const std::filesystem::path &path);

// Text rendering of a clarification: prompt then numbered options.
std::vector<std::string> FormatClarification(const Clarification &c);

// The 12 fields of a record, one "name: value" line each.
std::vector<std::string> FormatRecord(const SentenceRecord &rec,
                                      bool with_triggers = false);

}  // namespace diasexp

#endif  // DIASEXP_DIALOGUE_H_
