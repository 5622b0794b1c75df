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

#include "diasexp/morphology.h"

#include "diasexp/textnorm.h"

namespace diasexp {

namespace {

constexpr std::string_view kBreveA = "ă";

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsAsciiVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Position of the last vowel byte, counting ă/â/î as vowels.
std::size_t LastVowel(std::string_view s) {
  for (std::size_t i = s.size(); i > 0; --i) {
    char c = s[i - 1];
    if (IsAsciiVowel(c)) return i - 1;
    // ă = C4 83, â = C3 A2, î = C3 AE: report the lead byte.
    if (i >= 2) {
      std::string_view two = s.substr(i - 2, 2);
      if (two == "ă" || two == "â" || two == "î") return i - 2;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::size_t Utf8Length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::optional<EndingAnalysis> AnalyzeEnding(std::string_view word,
                                            const Lexicon &lex) {
  // Diacritics are kept: "fată" must not end in the article "-a".
  std::string lowered = Lower(word);
  if (lowered.empty()) return std::nullopt;

  std::string best;
  for (Table t : {Table::kTPos, Table::kTDo, Table::kTIo}) {
    for (const std::string &ending : lex.entries(t)) {
      if (ending.size() <= best.size()) continue;
      if (!EndsWith(lowered, ending) || ending.size() >= lowered.size()) continue;
      if (Utf8Length(lowered) - Utf8Length(ending) < kMinStemLength) continue;
      best = ending;
    }
  }
  if (best.empty()) return std::nullopt;

  EndingAnalysis a;
  a.word = lowered;
  a.ending = best;
  a.stem = lowered.substr(0, lowered.size() - best.size());
  for (Table t : {Table::kTPos, Table::kTDo, Table::kTIo}) {
    for (const std::string &ending : lex.entries(t)) {
      if (ending == best) a.tables.insert(t);
    }
  }

  // Undo a->e in the last stem syllable and look the base up.
  std::size_t e = a.stem.rfind('e');
  if (e != std::string::npos && LastVowel(a.stem) == e) {
    std::string candidate = a.stem;
    candidate[e] = 'a';
    candidate += kBreveA;
    for (const std::string &base : lex.entries(Table::kNounBases)) {
      if (base == candidate) {
        a.alternance_applied = true;
        a.base = base;
        break;
      }
    }
  }
  return a;
}

std::string AttachEnding(std::string_view base, std::string_view ending) {
  std::string stem(base);
  if (ending.empty()) return stem;
  bool vowel_initial = IsAsciiVowel(ending.front());
  bool front_vowel = ending.front() == 'e' || ending.front() == 'i';
  bool dropped = false;
  if (vowel_initial && EndsWith(stem, kBreveA) && stem.size() > kBreveA.size()) {
    stem.resize(stem.size() - kBreveA.size());
    dropped = true;
  }
  if (front_vowel && dropped) {
    std::size_t v = LastVowel(stem);
    if (v != std::string::npos && stem[v] == 'a') stem[v] = 'e';
  }
  return stem + std::string(ending);
}

}  // namespace diasexp
