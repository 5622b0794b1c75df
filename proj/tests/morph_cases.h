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

#ifndef DIASEXP_TESTS_MORPH_CASES_H_
#define DIASEXP_TESTS_MORPH_CASES_H_

#include <string>
#include <vector>

#include "diasexp/lexicon.h"
#include "diasexp/morphology.h"

namespace diasexp::testing {

inline bool EndsWith(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct RoundTrip {
  int words = 0;
  int checked = 0;
  std::vector<std::string> ties;      // "base + ending = word"
  std::vector<std::string> failures;  // non-tie words that did not round-trip
};

// Attaches every table ending to a list of noun bases (200 words) and
// analyzes the results back. A word is a tie when a longer table ending is
// also its suffix, so longest-match segmentation cannot recover the ending
// that was attached.
inline RoundTrip MorphRoundTrip() {
  const std::vector<std::string> bases = {
      "fată", "casă", "masă", "vară",  "țară", "codru", "carte", "copil", "băiat",
      "elev", "student", "profesor", "munte", "frate", "pom", "câine",
      "prieten", "oraș", "drum", "lup", "vecin", "mamă", "sat", "nor"};
  const std::vector<std::string> endings = {"lui", "ei", "ilor", "elor", "a",
                                            "ul", "ele", "ile", "ului"};
  Lexicon lex = Lexicon::Builtin();
  std::string extra = "[noun_bases]\n";
  for (const std::string &b : bases) {
    if (EndsWith(b, "ă")) extra += b + "\n";
  }
  lex.Merge(extra, "test");
  std::vector<std::string> all_endings;
  for (Table t : {Table::kTPos, Table::kTDo, Table::kTIo}) {
    for (const std::string &e : lex.entries(t)) all_endings.push_back(e);
  }

  RoundTrip out;
  for (const std::string &b : bases) {
    for (const std::string &e : endings) {
      if (out.words == 200) return out;
      ++out.words;
      std::string w = AttachEnding(b, e);
      bool tie = false;
      for (const std::string &other : all_endings) {
        if (other.size() > e.size() && EndsWith(w, other) &&
            Utf8Length(w) - Utf8Length(other) >= kMinStemLength) {
          tie = true;
        }
      }
      if (tie) {
        out.ties.push_back(b + " + " + e + " = " + w);
        continue;
      }
      ++out.checked;
      auto a = AnalyzeEnding(w, lex);
      bool ok = a && a->ending == e && a->stem + a->ending == w;
      // Undoing the alternance must give back the base it came from.
      bool alternated = EndsWith(b, "ă") && (e[0] == 'e' || e[0] == 'i');
      if (ok && alternated) ok = a->alternance_applied && a->base == b;
      if (!ok) out.failures.push_back(b + " + " + e + " = " + w);
    }
  }
  return out;
}

}  // namespace diasexp::testing

#endif  // DIASEXP_TESTS_MORPH_CASES_H_
