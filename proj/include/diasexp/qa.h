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

// Wh-questions over a story: the question word picks the field to report,
// the rest of the question is analyzed into constraints, and each matching
// record is rendered back as a short sentence.

#ifndef DIASEXP_QA_H_
#define DIASEXP_QA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/analyzer.h"
#include "diasexp/lexicon.h"
#include "diasexp/roles.h"
#include "diasexp/textnorm.h"

namespace diasexp {

class Story;

enum class Wh { kCine, kCe, kPeCine, kCui, kCum, kUnde, kCand, kDeCe, kPentruCe };

std::string_view WhName(Wh wh);  // "cine", "pe cine", "când", ...

struct WhMatch {
  Wh wh;
  std::size_t length;  // tokens consumed
};

// Wh-word or bigram ("pe cine", "de ce", "pentru ce") at the start.
std::optional<WhMatch> MatchWhWord(std::span<const Token> tokens);

struct Question {
  Wh wh = Wh::kCine;
  Role target = Role::kSubject;
  std::map<Role, std::string> constraints;
  std::string raw;
  bool copular = false;
  // Surface of the question's main verb, echoed in answers ("este").
  std::string predicate_head;
};

// Throws UnknownWhWord or NoPredicate.
Question ParseQuestion(std::span<const Token> tokens, const Lexicon &lex,
                       const ResolutionMemory &mem);

struct AnswerLine {
  std::string text;
  std::int64_t seq;  // record the line was rendered from (first one if merged)
};

// Rendered answers in story order, duplicates removed.
std::vector<AnswerLine> AnswerLines(const Question &q, const Story &story,
                                    const Lexicon &lex);

// Texts of AnswerLines, or the single no-answer sentence.
std::vector<std::string> Answer(const Question &q, const Story &story,
                                const Lexicon &lex);

inline constexpr std::string_view kNoAnswer = "Nu știu.";

// Folded last word of a predicate once negation, clitics and auxiliaries
// are stripped: "îl vor invita" -> "invita".
std::string HeadVerb(std::string_view predicate,
                     const Lexicon &lex = Lexicon::Builtin());

// Head verbs equal, with the short copula "e" standing for "este".
bool SamePredicateHead(std::string_view a, std::string_view b,
                       const Lexicon &lex = Lexicon::Builtin());

}  // namespace diasexp

#endif  // DIASEXP_QA_H_
