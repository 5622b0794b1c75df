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

// diasexp command-line tool. Exit codes: 0 success, 1 usage error, 2 data
// or format error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diasexp/analyzer.h"
#include "diasexp/batch.h"
#include "diasexp/dialogue.h"
#include "diasexp/error.h"
#include "diasexp/factstore.h"
#include "diasexp/qa.h"
#include "diasexp/repl.h"
#include "diasexp/service.h"
#include "diasexp/toygrammar.h"
#include "httplib.h"

#ifndef DIASEXP_DATA_DIR
#define DIASEXP_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace diasexp;

namespace {

std::string Join(const std::vector<std::string> &words) {
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

Lexicon LoadLexicon(const std::string &dir) {
  if (dir.empty()) return Lexicon::Builtin();
  return Lexicon::LoadDirectory(dir);
}

ResolutionMemory LoadMemoryIfSet(const std::string &path) {
  if (path.empty()) return {};
  return LoadMemory(path);
}

int Repl(const std::string &story, const std::string &lexicon,
         const std::string &memory, bool verbose) {
  ReplState state;
  state.lexicon = LoadLexicon(lexicon);
  state.memory = LoadMemoryIfSet(memory);
  state.memory_path = memory;
  state.verbose = verbose;
  if (!story.empty()) {
    if (fs::exists(story)) {
      LoadInto(state, story, /*bind=*/true);
    } else {
      state.story = Story(fs::path(story).stem().string());
      SaveState(state, story);
      state.story.Bind(story);
      state.story_path = story;
    }
  }
  int rc = RunRepl(state, std::cin, std::cout);
  if (!state.story_path.empty()) SaveState(state, state.story_path);
  if (!state.memory_path.empty()) SaveMemory(state.memory, state.memory_path);
  return rc;
}

int AnalyzeCmd(const std::vector<std::string> &words, const std::string &lexicon,
               const std::string &memory, bool json_out) {
  Lexicon lex = LoadLexicon(lexicon);
  ResolutionMemory mem = LoadMemoryIfSet(memory);
  AnalysisOutcome out = Analyze(Tokenize(StripPrompt(Join(words))), lex, mem);
  std::vector<std::string> unresolved;
  while (!out.complete()) {
    if (!json_out) {
      for (const std::string &l : FormatClarification(*out.pending)) std::cout << l << "\n";
    }
    unresolved.push_back(out.pending->words);
    out = DeferClarification(out, mem, lex);
  }
  if (json_out) {
    auto j = RecordToJson(*out.record);
    j["unresolved"] = unresolved;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const std::string &l : FormatRecord(*out.record, true)) std::cout << l << "\n";
  for (const std::string &w : unresolved) std::cout << "unresolved: " << w << "\n";
  return 0;
}

int AskCmd(const std::vector<std::string> &words, const std::string &story,
           const std::string &lexicon) {
  ReplState state;
  state.lexicon = LoadLexicon(lexicon);
  LoadInto(state, story);
  TokenList tokens = Tokenize(StripPrompt(Join(words)));
  Question q = ParseQuestion(tokens, state.lexicon, state.memory);
  for (const std::string &a : Answer(q, state.story, state.lexicon)) {
    std::cout << "R: " << a << "\n";
  }
  return 0;
}

int BatchCmd(const std::string &in, const std::string &gold,
             const std::string &choices, const std::string &report,
             const std::string &save_story, const std::string &lexicon) {
  Lexicon lex = LoadLexicon(lexicon);
  ResolutionMemory mem;
  std::vector<GoldRow> gold_rows;
  Choices choice_map;
  BatchOptions options;
  if (!gold.empty()) {
    gold_rows = LoadGold(gold);
    options.gold = &gold_rows;
  }
  if (!choices.empty()) {
    choice_map = LoadChoices(choices);
    options.choices = &choice_map;
  }
  Story story(save_story.empty() ? "story" : fs::path(save_story).stem().string());
  options.story = &story;
  BatchReport r = BatchAnalyze(LoadSentences(in), lex, mem, options);
  std::string text = r.Format();
  if (report.empty() || report == "-") {
    std::cout << text;
  } else {
    std::ofstream out(report, std::ios::binary);
    out << text;
    if (!out) throw StorageError("cannot write " + report);
  }
  if (!save_story.empty()) {
    story.memory() = mem;
    SaveStory(story, save_story);
  }
  return 0;
}

int CykCmd(const std::vector<std::string> &words, const std::string &grammar) {
  Cfg g = grammar.empty() ? Cfg::Toy() : Cfg::Load(grammar);
  CnfGrammar cnf = ToCnf(g);
  std::vector<std::string> sentence = SentenceWords(Join(words));
  try {
    auto tree = CykParse(cnf, sentence);
    if (tree) {
      std::cout << "ACCEPT " << Bracketed(Uncnf(cnf, *tree)) << "\n";
    } else {
      std::cout << "REJECT\n";
    }
  } catch (const UnknownWord &e) {
    std::cout << "UNKNOWN-WORD " << e.word() << "\n";
  }
  return 0;
}

int ServeCmd(int port, const std::string &host, const std::string &stories,
             const std::string &lexicon) {
  ServiceOptions options;
  options.stories_dir = stories;
  options.lexicon = LoadLexicon(lexicon);
  Service service(std::move(options));
  httplib::Server server;
  service.Mount(server);
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Pattern-based syntactic analysis of Romanian sentences"};
  app.require_subcommand(1);

  std::string story, lexicon, memory, grammar, in, gold, choices, report,
      save_story, host = "127.0.0.1";
  std::string stories = std::string(DIASEXP_DATA_DIR) + "/stories";
  std::vector<std::string> words;
  bool verbose = false, json_out = false;
  int port = 8080;

  auto *repl = app.add_subcommand("repl", "interactive dialogue");
  repl->add_option("--story", story, "story file (created if missing)");
  repl->add_option("--lexicon", lexicon, "directory of .lex files");
  repl->add_option("--memory", memory, "global clarification memory file");
  repl->add_flag("--verbose", verbose, "print A?/I? verdicts and fields");

  auto *analyze = app.add_subcommand("analyze", "print the fields of one sentence");
  analyze->add_option("sentence", words)->required();
  analyze->add_option("--lexicon", lexicon, "directory of .lex files");
  analyze->add_option("--memory", memory, "clarification memory file");
  analyze->add_flag("--json", json_out, "JSON output");

  auto *ask = app.add_subcommand("ask", "answer one question from a story");
  ask->add_option("question", words)->required();
  ask->add_option("--story", story, "story file")->required();
  ask->add_option("--lexicon", lexicon, "directory of .lex files");

  auto *batch = app.add_subcommand("batch", "analyze a sentence file");
  batch->add_option("--in", in, "one sentence per line")->required();
  batch->add_option("--gold", gold, "gold records for scoring");
  batch->add_option("--choices", choices, "scripted clarification answers");
  batch->add_option("--report", report, "report file, - for stdout")->required();
  batch->add_option("--save-story", save_story, "write the analyzed story");
  batch->add_option("--lexicon", lexicon, "directory of .lex files");

  auto *cyk = app.add_subcommand("cyk", "parse with the toy grammar");
  cyk->add_option("sentence", words)->required();
  cyk->add_option("--grammar", grammar, "grammar file");

  auto *serve = app.add_subcommand("serve", "HTTP session API");
  serve->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "bind address");
  serve->add_option("--stories", stories, "directory of named stories");
  serve->add_option("--lexicon", lexicon, "directory of .lex files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*repl) return Repl(story, lexicon, memory, verbose);
    if (*analyze) return AnalyzeCmd(words, lexicon, memory, json_out);
    if (*ask) return AskCmd(words, story, lexicon);
    if (*batch) return BatchCmd(in, gold, choices, report, save_story, lexicon);
    if (*cyk) return CykCmd(words, grammar);
    if (*serve) return ServeCmd(port, host, stories, lexicon);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
