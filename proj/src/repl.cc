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

#include "diasexp/repl.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "diasexp/error.h"
#include "diasexp/textnorm.h"

namespace diasexp {

namespace {

constexpr const char *kHelp[] = {
    "Type an assertion to store it or a question to query the story.",
    "/save [path]                 write the story",
    "/load <path>                 replace the story with a saved one",
    "/lexicon-add <table> <entry> add a vocabulary entry",
    "/show                        list the stored sentences",
    "/quit                        leave",
};

std::optional<int> OptionNumber(std::string_view s) {
  int n = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return n;
}

void Emit(ReplState &state, const TurnResult &r, ReplOutput &out) {
  switch (r.kind) {
    case TurnKind::kRecorded:
      out.lines.push_back("OK: recorded sentence " + std::to_string(r.record->seq) + ".");
      if (state.verbose) {
        for (const std::string &l : FormatRecord(*r.record, true)) {
          out.lines.push_back("   " + l);
        }
      }
      break;
    case TurnKind::kAnswers:
      for (const std::string &a : r.answers) out.lines.push_back("R: " + a);
      break;
    case TurnKind::kClarify:
      for (std::string &l : FormatClarification(*r.clarification)) {
        out.lines.push_back(std::move(l));
      }
      break;
    case TurnKind::kError:
      out.lines.push_back("E: " + r.message);
      break;
  }
}

void Command(ReplState &state, const std::string &line, ReplOutput &out) {
  std::istringstream in(line);
  std::string cmd;
  in >> cmd;
  std::string arg;
  std::getline(in, arg);
  arg = Normalize(arg).canonical;

  if (cmd == "/quit" || cmd == "/exit") {
    out.quit = true;
    return;
  }
  if (cmd == "/help") {
    for (const char *l : kHelp) out.lines.emplace_back(l);
    return;
  }
  if (state.pending) {
    out.lines.push_back("E: answer the pending clarification first");
    return;
  }
  if (cmd == "/save") {
    std::filesystem::path path = arg.empty() ? state.story_path : std::filesystem::path(arg);
    if (path.empty()) {
      out.lines.push_back("E: no story path; use /save <path>");
      return;
    }
    SaveState(state, path);
    if (state.story_path.empty()) state.story_path = path;
    out.lines.push_back("OK: saved " + std::to_string(state.story.size()) +
                        " records to " + path.string() + ".");
  } else if (cmd == "/load") {
    if (arg.empty()) {
      out.lines.push_back("E: usage: /load <path>");
      return;
    }
    LoadInto(state, arg);
    state.story_path = arg;
    out.lines.push_back("OK: loaded " + std::to_string(state.story.size()) +
                        " records from " + arg + ".");
  } else if (cmd == "/lexicon-add") {
    std::size_t sp = arg.find(' ');
    if (sp == std::string::npos) {
      out.lines.push_back("E: usage: /lexicon-add <table> <entry>");
      return;
    }
    std::string name = arg.substr(0, sp);
    auto table = ParseTable(name);
    if (!table) throw UnknownTable(name);
    std::string entry = arg.substr(sp + 1);
    AddLexiconEntry(state, *table, entry);
    out.lines.push_back("OK: added \"" + entry + "\" to " + name + ".");
  } else if (cmd == "/show") {
    for (const SentenceRecord &rec : state.story.records()) {
      out.lines.push_back(std::to_string(rec.seq) + ". " + rec.raw);
    }
  } else {
    out.lines.push_back("E: unknown command " + cmd);
  }
}

}  // namespace

ReplOutput ReplStep(ReplState &state, std::string_view line) {
  ReplOutput out;
  std::string text = Normalize(line).canonical;
  if (text.empty() || text[0] == '#') return out;
  try {
    if (text[0] == '/') {
      Command(state, text, out);
      return out;
    }
    if (state.pending) {
      const Clarification &c = *state.pending->pending;
      auto n = OptionNumber(text);
      if (!n) {
        out.lines.push_back("E: answer the pending clarification first (1-" +
                            std::to_string(c.options.size()) + ")");
        return out;
      }
      Emit(state, ChooseNumber(state, c.id, *n), out);
      return out;
    }
    std::string sentence = StripPrompt(text);
    if (state.verbose) {
      bool q = ClassifySentence(Tokenize(sentence)) == SentenceKind::kInterrogative;
      out.lines.push_back(q ? "I?" : "A?");
    }
    Emit(state, Say(state, sentence), out);
  } catch (const Error &e) {
    out.lines.push_back(std::string("E: ") + e.what());
  }
  return out;
}

int RunRepl(ReplState &state, std::istream &in, std::ostream &out) {
  std::string line;
  while (std::getline(in, line)) {
    ReplOutput r = ReplStep(state, line);
    for (const std::string &l : r.lines) out << l << '\n';
    out.flush();
    if (r.quit) break;
  }
  return 0;
}

}  // namespace diasexp
