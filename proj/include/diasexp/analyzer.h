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

// Pattern-based constituent analysis of assertive Romanian sentences.
//
// The analysis runs in stages over one tokenized sentence:
//
//   1. segmentation on commas;
//   2. predicate location: the first form of "a fi", or the first verb
//      group (negation, clitic pronouns and auxiliaries absorbed: "nu
//      iubește", "îl vor invita", "s-ar căsători");
//   3. prefix indicators: pref_why/goal/where/when/how open an adverbial
//      that runs to the end of the comma segment; pref_do/pref_io take the
//      indicator plus one noun; pref_attrib opens an attribute; standalone
//      adverb-list words become When/Where/How;
//   4. ending classification of the remaining nouns (t_do -> Dir_obj,
//      t_io -> Indir_obj, t_pos -> attribute of the preceding part);
//   5. positional roles: the group before the predicate is the subject,
//      words trailing a complete noun part are its attribute, and after a
//      copula the first bare part is the predicative, stored as Dir_obj.
//
// A word with two or more live role readings that the resolution memory
// cannot settle produces a Clarification instead of a guess.

#ifndef DIASEXP_ANALYZER_H_
#define DIASEXP_ANALYZER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diasexp/lexicon.h"
#include "diasexp/record.h"
#include "diasexp/roles.h"
#include "diasexp/textnorm.h"

namespace diasexp {

enum class TriggerKind {
  kPrefix,
  kEnding,
  kPosition,
  kPositionAfterCopula,
  kAdverbList,
  kWordList,
  kToBeForm,
  kVerbGroup,
  kUserChoice,
  kLearned,
};

struct Trigger {
  TriggerKind kind = TriggerKind::kPosition;
  std::string detail;  // table name, or table:ending for endings

  // "prefix pref_why", "ending t_io:ilor", "position", "to-be-form", ...
  std::string Label() const;
  bool operator==(const Trigger &) const = default;
};

struct Constituent {
  Role role;
  std::string text;
  TokenRange range;
  Trigger trigger;
  bool operator==(const Constituent &) const = default;
};

struct Clarification {
  std::string id;
  TokenRange word_range;
  std::string words;  // surface text of word_range
  std::string prompt;
  std::vector<Role> options;  // 2 or 3 distinct roles
  std::string context_key;
  bool operator==(const Clarification &) const = default;
};

// Learned answers to clarifications, keyed by
// "<trigger>|<role of the preceding part>|<copular 0/1>",
// e.g. "ending:ilor|dir_obj|0".
class ResolutionMemory {
 public:
  std::optional<Role> Lookup(const std::string &key) const;
  void Learn(const std::string &key, Role role) { entries_[key] = role; }
  const std::map<std::string, Role> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool operator==(const ResolutionMemory &) const = default;

  static std::string Key(const std::string &trigger, std::optional<Role> prev,
                         bool copular);

 private:
  std::map<std::string, Role> entries_;
};

enum class AnalysisMode {
  kAssertion,
  // Questions: the predicate may open the remainder, the subject may
  // follow it, and ambiguities resolve to the first reading instead of
  // asking.
  kQuestion,
};

// Either a finished record or a partial analysis waiting on one
// clarification. Carries what is needed to resume.
struct AnalysisOutcome {
  std::vector<Constituent> constituents;
  std::optional<SentenceRecord> record;
  std::optional<Clarification> pending;

  TokenList tokens;
  std::string raw;
  // Choices made for this sentence; nullopt marks a deferred word.
  std::map<TokenRange, std::optional<Role>> choices;
  // Token ranges the user resolved (for user-choice provenance).
  std::vector<TokenRange> user_resolved;

  bool complete() const { return record.has_value(); }
};

// Throws EmptySentence or NoPredicate.
AnalysisOutcome Analyze(std::span<const Token> tokens, const Lexicon &lex,
                        const ResolutionMemory &mem,
                        AnalysisMode mode = AnalysisMode::kAssertion);

// Convenience: normalizes and tokenizes raw text first.
AnalysisOutcome AnalyzeText(std::string_view raw, const Lexicon &lex,
                            const ResolutionMemory &mem);

// Applies the user's answer, memorizes it and resumes the analysis. Throws
// UnknownClarification or InvalidChoice.
std::pair<AnalysisOutcome, ResolutionMemory> ResolveClarification(
    const AnalysisOutcome &pending, const std::string &id, Role choice,
    const ResolutionMemory &mem, const Lexicon &lex);

// Leaves the ambiguous words unassigned and resumes (batch mode).
AnalysisOutcome DeferClarification(const AnalysisOutcome &pending,
                                   const ResolutionMemory &mem,
                                   const Lexicon &lex);

struct Explanation {
  Role role;
  std::string text;
  std::string trigger;
  bool operator==(const Explanation &) const = default;
};

// One entry per filled field, in column order.
std::vector<Explanation> Explain(const SentenceRecord &record);

// Builds the record from a constituent list (fields joined in token order).
SentenceRecord BuildRecord(std::span<const Constituent> constituents,
                           bool predicative, std::string raw);

}  // namespace diasexp

#endif  // DIASEXP_ANALYZER_H_
