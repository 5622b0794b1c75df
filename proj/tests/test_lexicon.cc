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

#include "diasexp/error.h"
#include "diasexp/lexicon.h"
#include "doctest.h"
#include "test_util.h"

namespace diasexp {
namespace {

using testing::TempDir;
using testing::WriteFile;

TEST_CASE("builtin lexicon") {
  const Lexicon &lex = Lexicon::Builtin();
  CHECK(lex.Contains(Table::kPrefWhy, "deoarece"));
  CHECK(lex.Contains(Table::kPrefWhy, "intrucat"));
  CHECK(lex.Contains(Table::kFormsOfToBe, "este"));
  CHECK(lex.Contains(Table::kTPos, "ilor"));
  CHECK(lex.Contains(Table::kTIo, "ilor"));
  CHECK(lex.Contains(Table::kTDo, "ul"));
  CHECK_FALSE(lex.Contains(Table::kPrefWhy, "carte"));
  std::filesystem::path none[1];
  CHECK(Lexicon::Load(std::span<const std::filesystem::path>(none, 0)) == lex);
}

TEST_CASE("table names round-trip") {
  for (std::size_t i = 0; i < kNumTables; ++i) {
    Table t = static_cast<Table>(i);
    CHECK(ParseTable(TableName(t)) == t);
  }
  CHECK_FALSE(ParseTable("bogus"));
}

TEST_CASE("match prefix") {
  const Lexicon &lex = Lexicon::Builtin();
  auto m = lex.MatchPrefix(Tokenize("în fața școlii"), 0);
  REQUIRE(m);
  CHECK(m->table() == Table::kPrefWhere);
  CHECK(m->length == 2);

  m = lex.MatchPrefix(Tokenize("pe Elena"), 0);
  REQUIRE(m);
  CHECK(m->table() == Table::kPrefDo);
  CHECK(m->has(Table::kPrefWhen));
  CHECK(m->length == 1);

  CHECK_FALSE(lex.MatchPrefix(Tokenize("carte"), 0));

  // Folded match without diacritics.
  m = lex.MatchPrefix(Tokenize("in fata scolii"), 0);
  REQUIRE(m);
  CHECK(m->length == 2);

  // Phrases never cross punctuation.
  m = lex.MatchPrefix(Tokenize("pentru, ca"), 0);
  if (m) CHECK(m->length == 1);
}

TEST_CASE("loading user files") {
  TempDir dir;
  WriteFile(dir / "a.lex", "# place\n[pref_where]\nîn mijlocul\n");
  std::filesystem::path paths[] = {dir / "a.lex"};
  Lexicon lex = Lexicon::Load(paths);
  auto m = lex.MatchPrefix(Tokenize("în mijlocul curții"), 0);
  REQUIRE(m);
  CHECK(m->table() == Table::kPrefWhere);
  CHECK(m->length == 2);
  CHECK(lex.Contains(Table::kPrefWhy, "deoarece"));

  CHECK(Lexicon::LoadDirectory(dir.path()) == lex);

  WriteFile(dir / "b.lex", "[bogus]\nx\n");
  std::filesystem::path bad[] = {dir / "b.lex"};
  try {
    Lexicon::Load(bad);
    FAIL("expected UnknownTable");
  } catch (const UnknownTable &e) {
    CHECK(e.name() == "bogus");
  }

  WriteFile(dir / "c.lex", "x\n");
  std::filesystem::path orphan[] = {dir / "c.lex"};
  CHECK_THROWS_AS(Lexicon::Load(orphan), ParseError);

  WriteFile(dir / "d.lex", "[adv_when]\nde tot\n");
  std::filesystem::path multi[] = {dir / "d.lex"};
  CHECK_THROWS_AS(Lexicon::Load(multi), ParseError);
}

TEST_CASE("add entry") {
  Lexicon lex;
  lex.Merge("[adv_how]\nrepede\n", "t");
  Lexicon more = lex.AddEntry({Table::kAdvWhen, "mâine"});
  CHECK(more.Contains(Table::kAdvWhen, "mâine"));
  CHECK(more.Contains(Table::kAdvWhen, "maine"));
  CHECK_FALSE(lex.Contains(Table::kAdvWhen, "mâine"));

  CHECK(more.AddEntry({Table::kAdvWhen, "mâine"}) == more);
  CHECK_THROWS_AS(lex.AddEntry({Table::kAdvWhen, ""}), ParseError);
  CHECK_THROWS_AS(lex.AddEntry({Table::kAdvWhen, "   "}), ParseError);
}

TEST_CASE("learned entries are appended to the learned file") {
  TempDir dir;
  Lexicon lex = Lexicon::Builtin();
  lex.set_learned_path(dir / "learned.lex");
  Lexicon more = lex.AddEntry({Table::kAdvHow, "grăbit", EntrySource::kLearned});
  std::filesystem::path paths[] = {dir / "learned.lex"};
  CHECK(Lexicon::Load(paths) == more);
}

TEST_CASE("serialize round-trips") {
  const Lexicon &lex = Lexicon::Builtin();
  Lexicon copy;
  copy.Merge(lex.Serialize(), "copy");
  CHECK(copy == lex);
  CHECK(copy.size() == lex.size());
}

}  // namespace
}  // namespace diasexp
