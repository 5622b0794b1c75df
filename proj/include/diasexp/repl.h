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

// Line-oriented front end of the dialogue. Output lines start with
// "R:" (answers), "Q:" (clarification prompts), "OK:" (acknowledgments) or
// "E:" (errors).

#ifndef DIASEXP_REPL_H_
#define DIASEXP_REPL_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diasexp/dialogue.h"

namespace diasexp {

struct ReplOutput {
  std::vector<std::string> lines;
  bool quit = false;
};

// Handles a sentence, an option number while a clarification is pending,
// or a command: /save [path], /load <path>, /lexicon-add <table> <entry>,
// /show, /help, /quit. Errors become "E:" lines and leave the state as it
// was.
ReplOutput ReplStep(ReplState &state, std::string_view line);

// Reads lines until EOF or /quit, writing output lines. Returns 0.
int RunRepl(ReplState &state, std::istream &in, std::ostream &out);

}  // namespace diasexp

#endif  // DIASEXP_REPL_H_
