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

// Ending-based word classification against the t_pos / t_do / t_io tables.

#ifndef DIASEXP_MORPHOLOGY_H_
#define DIASEXP_MORPHOLOGY_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "diasexp/lexicon.h"

namespace diasexp {

// Shortest stem an ending may leave behind.
inline constexpr std::size_t kMinStemLength = 2;

struct EndingAnalysis {
  std::string word;    // lowercase, diacritics kept
  std::string stem;    // word minus ending
  std::string ending;
  std::set<Table> tables;  // every ending table containing `ending`
  bool alternance_applied = false;
  // Lexical base form recovered by undoing the a->e alternance ("fată").
  std::optional<std::string> base;

  bool has(Table t) const { return tables.count(t) > 0; }
};

// Longest ending from t_pos/t_do/t_io that is a proper suffix of word and
// leaves a stem of at least kMinStemLength characters. The alternance is
// reported when un-alternating the stem's last "e" to "a" and appending
// "ă" yields an entry of the noun_bases table.
std::optional<EndingAnalysis> AnalyzeEnding(std::string_view word,
                                            const Lexicon &lex);

// Concatenates base and ending. A final "ă" is dropped before a vowel-initial
// ending, and before an ending starting with e/i the last stem vowel "a"
// alternates to "e": "fată" + "ei" = "fetei", "fete" + "lor" = "fetelor".
std::string AttachEnding(std::string_view base, std::string_view ending);

// Number of code points.
std::size_t Utf8Length(std::string_view s);

}  // namespace diasexp

#endif  // DIASEXP_MORPHOLOGY_H_
