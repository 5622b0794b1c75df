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

#include <set>
#include <string>
#include <vector>

#include "diasexp/lexicon.h"
#include "diasexp/morphology.h"
#include "doctest.h"
#include "morph_cases.h"

namespace diasexp {
namespace {

TEST_CASE("documented ending analyses") {
  const Lexicon &lex = Lexicon::Builtin();
  auto a = AnalyzeEnding("părinților", lex);
  REQUIRE(a);
  CHECK(a->ending == "ilor");
  CHECK(a->tables == std::set<Table>{Table::kTPos, Table::kTIo});

  a = AnalyzeEnding("băiatul", lex);
  REQUIRE(a);
  CHECK(a->ending == "ul");
  CHECK(a->tables == std::set<Table>{Table::kTDo});
  CHECK(a->stem == "băiat");

  a = AnalyzeEnding("fetei", lex);
  REQUIRE(a);
  CHECK(a->ending == "ei");
  CHECK(a->tables == std::set<Table>{Table::kTPos, Table::kTIo});
  CHECK(a->alternance_applied);
  CHECK(a->base == "fată");

  CHECK_FALSE(AnalyzeEnding("el", lex));
  CHECK_FALSE(AnalyzeEnding("carte", lex));
}

TEST_CASE("diacritics keep endings apart") {
  // "fată" is not "fat" + "a".
  CHECK_FALSE(AnalyzeEnding("fată", Lexicon::Builtin()));
  auto a = AnalyzeEnding("fata", Lexicon::Builtin());
  REQUIRE(a);
  CHECK(a->ending == "a");
}

TEST_CASE("attach ending") {
  CHECK(AttachEnding("fete", "lor") == "fetelor");
  CHECK(AttachEnding("fată", "ei") == "fetei");
  CHECK(AttachEnding("x", "ul") == "xul");
  CHECK(AttachEnding("fată", "a") == "fata");
  CHECK(AttachEnding("băiat", "ului") == "băiatului");
  CHECK(AttachEnding("copil", "") == "copil");
}

TEST_CASE("attach and analyze round-trip over generated words") {
  testing::RoundTrip r = testing::MorphRoundTrip();
  CHECK(r.words == 200);
  CHECK(r.checked + static_cast<int>(r.ties.size()) == r.words);
  for (const std::string &t : r.ties) MESSAGE("tie: " << t);
  for (const std::string &f : r.failures) MESSAGE("failed: " << f);
  CHECK(r.failures.empty());
  CHECK(r.ties.size() < 20);
}

TEST_CASE("utf8 length") {
  CHECK(Utf8Length("fată") == 4);
  CHECK(Utf8Length("") == 0);
  CHECK(Utf8Length("șțăîâ") == 5);
}

}  // namespace
}  // namespace diasexp
