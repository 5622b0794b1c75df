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

#include "diasexp/dialogue.h"

#include <algorithm>

#include "diasexp/error.h"
#include "diasexp/qa.h"
#include "diasexp/textnorm.h"

namespace diasexp {

namespace {

TurnResult ErrorResult(std::string message) {
  TurnResult r;
  r.kind = TurnKind::kError;
  r.message = std::move(message);
  return r;
}

// Records a finished analysis or parks a pending one.
TurnResult Settle(ReplState &state, AnalysisOutcome outcome) {
  TurnResult r;
  if (outcome.complete()) {
    SentenceRecord rec = *outcome.record;
    rec.seq = state.story.Append(rec);
    state.pending.reset();
    r.kind = TurnKind::kRecorded;
    r.record = std::move(rec);
    return r;
  }
  r.kind = TurnKind::kClarify;
  r.clarification = outcome.pending;
  state.pending = std::move(outcome);
  return r;
}

}  // namespace

std::string StripPrompt(std::string_view line) {
  std::string s = Normalize(line).canonical;
  for (std::string_view prefix : {"A:", "I:", "Î:"}) {
    if (s.rfind(prefix, 0) == 0) {
      s = Normalize(std::string_view(s).substr(prefix.size())).canonical;
      break;
    }
  }
  return s;
}

TurnResult Say(ReplState &state, std::string_view text) {
  if (state.pending) {
    return ErrorResult("answer the pending clarification first");
  }
  std::string sentence = StripPrompt(text);
  try {
    TokenList tokens = Tokenize(sentence);
    bool question = ClassifySentence(tokens) == SentenceKind::kInterrogative;
    if (question) {
      Question q = ParseQuestion(tokens, state.lexicon, state.memory);
      TurnResult r;
      r.kind = TurnKind::kAnswers;
      r.interrogative = true;
      r.answers = Answer(q, state.story, state.lexicon);
      return r;
    }
    return Settle(state, Analyze(tokens, state.lexicon, state.memory));
  } catch (const Error &e) {
    return ErrorResult(e.what());
  }
}

TurnResult Choose(ReplState &state, const std::string &id, Role choice) {
  if (!state.pending) throw UnknownClarification(id);
  auto [outcome, memory] = ResolveClarification(*state.pending, id, choice,
                                                state.memory, state.lexicon);
  state.memory = std::move(memory);
  return Settle(state, std::move(outcome));
}

TurnResult ChooseNumber(ReplState &state, const std::string &id, int n) {
  if (!state.pending || !state.pending->pending ||
      state.pending->pending->id != id) {
    throw UnknownClarification(id);
  }
  const auto &options = state.pending->pending->options;
  if (n < 1 || n > static_cast<int>(options.size())) {
    throw InvalidChoice("option " + std::to_string(n) + " of " +
                        std::to_string(options.size()));
  }
  return Choose(state, id, options[n - 1]);
}

void AddLexiconEntry(ReplState &state, Table table, const std::string &entry) {
  LexiconDelta delta{table, Normalize(entry).canonical, EntrySource::kLearned};
  state.lexicon = state.lexicon.AddEntry(delta);
  state.story.lexicon_deltas().push_back(delta);
}

void LoadInto(ReplState &state, const std::filesystem::path &path, bool bind) {
  Story story = LoadStory(path);
  Lexicon lex = state.lexicon;
  for (const LexiconDelta &d : story.lexicon_deltas()) lex = lex.AddEntry(d);
  ResolutionMemory mem = state.memory;
  for (const auto &[key, role] : story.memory().entries()) mem.Learn(key, role);
  state.story = std::move(story);
  state.lexicon = std::move(lex);
  state.memory = std::move(mem);
  state.pending.reset();
  if (bind) {
    state.story.Bind(path);
    state.story_path = path;
  }
}

void SaveState(ReplState &state, const std::filesystem::path &path) {
  state.story.memory() = state.memory;
  SaveStory(state.story, path);
}

std::vector<std::string> FormatClarification(const Clarification &c) {
  std::vector<std::string> out;
  out.push_back("Q: " + c.prompt);
  for (std::size_t i = 0; i < c.options.size(); ++i) {
    out.push_back("   " + std::to_string(i + 1) + ") " +
                  std::string(RoleName(c.options[i])) + " (" +
                  std::string(RoleLabel(c.options[i])) + ")");
  }
  return out;
}

std::vector<std::string> FormatRecord(const SentenceRecord &rec,
                                      bool with_triggers) {
  std::vector<std::string> out;
  for (Role r : kAllRoles) {
    std::string line = std::string(FieldName(r)) + ":";
    if (rec.has(r)) {
      line += " " + rec.get(r)->text;
      if (with_triggers && !rec.get(r)->trigger.empty()) {
        line += "  [" + rec.get(r)->trigger + "]";
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace diasexp
