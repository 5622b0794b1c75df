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

#include <sstream>
#include <string>
#include <vector>

#include "diasexp/batch.h"
#include "diasexp/dialogue.h"
#include "diasexp/error.h"
#include "diasexp/repl.h"
#include "doctest.h"
#include "json.hpp"
#include "test_util.h"

namespace diasexp {
namespace {

using testing::DataPath;
using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

std::string Replay(const std::string &transcript, ReplState &state) {
  std::istringstream in(transcript);
  std::ostringstream out;
  RunRepl(state, in, out);
  return out.str();
}

std::string Replay(const std::string &transcript) {
  ReplState state;
  return Replay(transcript, state);
}

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

TEST_CASE("prompt stripping") {
  CHECK(StripPrompt("A: Elena este frumoasă.") == "Elena este frumoasă.");
  CHECK(StripPrompt("I: Cum este Elena?") == "Cum este Elena?");
  CHECK(StripPrompt("Î: Cui va dărui Adrian?") == "Cui va dărui Adrian?");
  CHECK(StripPrompt("  Elena vine. ") == "Elena vine.");
}

TEST_CASE("transcript replay is byte-identical") {
  std::string transcript = ReadFile(DataPath("transcripts/demo_story.txt"));
  std::string first = Replay(transcript);
  CHECK(first == Replay(transcript));
  CHECK(first == ReadFile(DataPath("transcripts/demo_story.expected")));

  std::vector<std::string> answers;
  for (const std::string &l : Lines(first)) {
    if (l.rfind("R: ", 0) == 0) answers.push_back(l.substr(3));
  }
  std::vector<std::string> want;
  std::istringstream gold(ReadFile(DataPath("gold/demo_story_answers.jsonl")));
  std::string line;
  while (std::getline(gold, line)) {
    auto j = nlohmann::json::parse(line);
    for (const auto &a : j["answers"]) want.push_back(a);
  }
  CHECK(answers == want);
}

TEST_CASE("the replayed story equals the bundled gold story") {
  ReplState state;
  Replay(ReadFile(DataPath("transcripts/demo_story.txt")), state);
  Story gold = LoadStory(DataPath("stories/gold.jsonl"));
  REQUIRE(state.story.size() == gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    CHECK(SerializeRecord(state.story.records()[i]) == SerializeRecord(gold.records()[i]));
  }
  CHECK(state.memory == gold.memory());
}

TEST_CASE("input is refused while a clarification is pending") {
  ReplState state;
  ReplOutput out = ReplStep(state, "Adrian a pus cartea pe masă.");
  REQUIRE(state.pending);
  REQUIRE(out.lines.size() == 4);
  CHECK(out.lines[0].rfind("Q: ", 0) == 0);

  out = ReplStep(state, "Elena este frumoasă.");
  REQUIRE(out.lines.size() == 1);
  CHECK(out.lines[0].rfind("E: ", 0) == 0);
  CHECK(state.story.size() == 0);

  out = ReplStep(state, "/save");
  CHECK(out.lines[0].rfind("E: ", 0) == 0);

  out = ReplStep(state, "7");
  CHECK(out.lines[0].rfind("E: ", 0) == 0);
  CHECK(state.pending);

  TurnResult r = Say(state, "Elena este frumoasă.");
  CHECK(r.kind == TurnKind::kError);

  out = ReplStep(state, "2");
  CHECK_FALSE(state.pending);
  REQUIRE(state.story.size() == 1);
  CHECK(state.story.records()[0].text(Role::kWhen) == "pe masă");
  CHECK(out.lines == std::vector<std::string>{"OK: recorded sentence 1."});
}

TEST_CASE("clarification by role and errors") {
  ReplState state;
  TurnResult r = Say(state, "Elena este prietena lui Adrian.");
  REQUIRE(r.kind == TurnKind::kClarify);
  std::string id = r.clarification->id;
  CHECK_THROWS_AS(Choose(state, "other", Role::kIndirObj), UnknownClarification);
  CHECK_THROWS_AS(Choose(state, id, Role::kWhy), InvalidChoice);
  CHECK_THROWS_AS(ChooseNumber(state, id, 0), InvalidChoice);
  CHECK_THROWS_AS(ChooseNumber(state, id, 3), InvalidChoice);
  r = Choose(state, id, Role::kAttributeDo);
  CHECK(r.kind == TurnKind::kRecorded);
  CHECK(r.record->text(Role::kAttributeDo) == "lui Adrian");
  CHECK_THROWS_AS(ChooseNumber(state, id, 1), UnknownClarification);

  // The answer is remembered.
  r = Say(state, "Elena este sora lui Adrian.");
  CHECK(r.kind == TurnKind::kRecorded);
}

TEST_CASE("errors leave the state unchanged") {
  ReplState state;
  ReplOutput out = ReplStep(state, "mereu.");
  REQUIRE(out.lines.size() == 1);
  CHECK(out.lines[0].rfind("E: ", 0) == 0);
  CHECK(state.story.size() == 0);
  out = ReplStep(state, "/lexicon-add bogus x");
  CHECK(out.lines[0].rfind("E: ", 0) == 0);
  out = ReplStep(state, "/frobnicate");
  CHECK(out.lines[0].rfind("E: ", 0) == 0);
}

TEST_CASE("save, load and show") {
  TempDir dir;
  ReplState state;
  ReplStep(state, "Elena este sociabilă mereu.");
  ReplStep(state, "Elena iubește pe Adrian.");
  ReplOutput out = ReplStep(state, "/save");
  CHECK(out.lines[0].rfind("E: ", 0) == 0);

  std::string path = (dir / "s.jsonl").string();
  out = ReplStep(state, "/save " + path);
  REQUIRE(out.lines.size() == 1);
  CHECK(out.lines[0] == "OK: saved 2 records to " + path + ".");
  CHECK(LoadStory(path).size() == 2);

  ReplState other;
  out = ReplStep(other, "/load " + path);
  CHECK(out.lines[0] == "OK: loaded 2 records from " + path + ".");
  CHECK(other.story == LoadStory(path));
  out = ReplStep(other, "/show");
  CHECK(out.lines == std::vector<std::string>{"1. Elena este sociabilă mereu.",
                                              "2. Elena iubește pe Adrian."});
  out = ReplStep(other, "Pe cine iubește Elena?");
  CHECK(out.lines == std::vector<std::string>{"R: Elena iubește pe Adrian."});
  CHECK(ReplStep(other, "/quit").quit);
}

TEST_CASE("reloading the saved story gives the same answers") {
  TempDir dir;
  ReplState state;
  std::string transcript = ReadFile(DataPath("transcripts/demo_story.txt"));
  std::string first = Replay(transcript, state);
  SaveState(state, dir / "story.jsonl");

  std::string questions;
  for (const std::string &l : Lines(transcript)) {
    if (l.rfind("I:", 0) == 0 || l.rfind("Î:", 0) == 0) questions += l + "\n";
  }
  ReplState reloaded;
  LoadInto(reloaded, dir / "story.jsonl");
  std::string again = Replay(questions, reloaded);
  std::string want;
  for (const std::string &l : Lines(first)) {
    if (l.rfind("R: ", 0) == 0) want += l + "\n";
  }
  CHECK(again == want);
}

TEST_CASE("lexicon additions are kept with the story") {
  TempDir dir;
  ReplState state;
  ReplOutput out = ReplStep(state, "/lexicon-add adv_how politicos");
  CHECK(out.lines == std::vector<std::string>{"OK: added \"politicos\" to adv_how."});
  CHECK(state.lexicon.Contains(Table::kAdvHow, "politicos"));
  SaveState(state, dir / "s.jsonl");
  ReplState other;
  other.lexicon = Lexicon::Builtin();
  LoadInto(other, dir / "s.jsonl");
  CHECK(other.lexicon == state.lexicon);
}

TEST_CASE("verbose mode prints the sentence kind") {
  ReplState state;
  state.verbose = true;
  ReplOutput out = ReplStep(state, "Elena este frumoasă.");
  REQUIRE(out.lines.size() >= 2);
  CHECK(out.lines[0] == "A?");
  CHECK(out.lines[1] == "OK: recorded sentence 1.");
  CHECK(out.lines[2] == "   subject: Elena  [position]");
  out = ReplStep(state, "Cum este Elena?");
  CHECK(out.lines == std::vector<std::string>{"I?", "R: Elena este frumoasă."});
}

TEST_CASE("format clarification") {
  Clarification c;
  c.prompt = "What is \"x\" in \"y\"?";
  c.options = {Role::kIndirObj, Role::kAttributeDo};
  CHECK(FormatClarification(c) ==
        std::vector<std::string>{"Q: What is \"x\" in \"y\"?",
                                 "   1) Indir_obj (indirect object)",
                                 "   2) Attribute_do (attribute of the direct object)"});
}

TEST_CASE("batch over the demo story") {
  Lexicon lex = Lexicon::Builtin();
  ResolutionMemory mem;
  auto gold = LoadGold(DataPath("gold/demo_story_gold.jsonl"));
  auto choices = LoadChoices(DataPath("gold/demo_story_choices.tsv"));
  Story story("gold");
  BatchOptions opt{&gold, &choices, &story};
  BatchReport r = BatchAnalyze(LoadSentences(DataPath("gold/demo_story_assertions.txt")), lex, mem, opt);
  CHECK(r.rows.size() == 25);
  CHECK(story.size() == 25);
  CHECK(r.scored_rows == 23);
  CHECK(r.all_accuracy() >= 0.80);
  CHECK(r.filled_accuracy() >= 0.80);
  CHECK(r.Format() == r.Format());
}

TEST_CASE("batch defers unanswered clarifications") {
  ResolutionMemory mem;
  BatchReport r = BatchAnalyze({"Copiii cei cuminți au recitat o poezie părinților, în fața școlii."},
                               Lexicon::Builtin(), mem);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].deferred == 1);
  REQUIRE(r.rows[0].record);
  CHECK_FALSE(r.rows[0].record->has(Role::kIndirObj));
  CHECK(mem.empty());
}

TEST_CASE("batch edge cases") {
  TempDir dir;
  WriteFile(dir / "empty.txt", "");
  ResolutionMemory mem;
  BatchReport r = BatchAnalyze(LoadSentences(dir / "empty.txt"), Lexicon::Builtin(), mem);
  CHECK(r.rows.empty());
  CHECK(r.all_cells == 0);
  CHECK(r.Format().find("sentences: 0") != std::string::npos);

  CHECK_THROWS_AS(ParseGold("{\"raw\":\"x\",\"colour\":\"red\"}\n"), FormatVersionError);
  CHECK_THROWS_AS(ParseGold("{\"raw\":\"x\",\"exclude\":[\"colour\"]}\n"), FormatVersionError);
  CHECK_THROWS_AS(ParseGold("nope\n"), StorageError);

  r = BatchAnalyze({"mereu."}, Lexicon::Builtin(), mem);
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].error.empty());
}

TEST_CASE("choices file") {
  Choices c = ParseChoices("# x\nLui Adrian\tattribute_do\npe părinții\tDir_obj\n");
  CHECK(c == Choices{{"lui adrian", Role::kAttributeDo}, {"pe parintii", Role::kDirObj}});
  CHECK_THROWS_AS(ParseChoices("x\tbogus\n"), StorageError);
}

}  // namespace
}  // namespace diasexp
