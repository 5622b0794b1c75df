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

// A small context-free grammar toolkit: grammar files, conversion to
// Chomsky normal form and CYK parsing.
//
// Grammar file format:
//
//   # comment
//   %start S
//   S  -> NP VP
//   NP -> Pron | N | Det N | NP AP
//   Det -> "orice" | "fiecare"
//
// Quoted items are terminals; every bare item must appear as a left-hand
// side somewhere. Without %start the first left-hand side is the start.

#ifndef DIASEXP_TOYGRAMMAR_H_
#define DIASEXP_TOYGRAMMAR_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diasexp {

struct Symbol {
  std::string name;
  bool terminal = false;
  bool operator==(const Symbol &) const = default;
  auto operator<=>(const Symbol &) const = default;
};

struct CfgRule {
  std::string lhs;
  std::vector<Symbol> rhs;
  bool operator==(const CfgRule &) const = default;
};

struct Cfg {
  std::string start = "S";
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::vector<CfgRule> rules;

  // Throws ParseError.
  static Cfg Parse(std::string_view text, const std::string &file = {});
  static Cfg Load(const std::string &path);
  // The bundled toy grammar for Romanian.
  static const Cfg &Toy();

  // Throws ParseError when a rule uses an undeclared symbol or the start
  // symbol has no rules.
  void Validate() const;
};

// Serialized grammar text accepted by Cfg::Parse.
std::string FormatCfg(const Cfg &g);

struct BinaryRule {
  std::string lhs, left, right;
  // Original rule indices: the collapsed unit chain, then the base rule.
  // A terminal proxy rule has an empty chain.
  std::vector<int> chain;
};

struct LexicalRule {
  std::string lhs, word;
  std::vector<int> chain;
};

// Helper symbols: "@" prefixes binarization symbols, "#" prefixes terminal
// proxies.
struct CnfGrammar {
  std::string start;
  std::vector<BinaryRule> binary;
  std::vector<LexicalRule> lexical;
  std::set<std::string> terminals;
  std::set<std::string> nonterminals;
  // Left-hand side of each original rule, for the de-CNF view.
  std::vector<std::string> source_lhs;

  bool HasTerminal(std::string_view w) const;
};

// Throws UnsupportedGrammar on epsilon rules.
CnfGrammar ToCnf(const Cfg &g);

struct ParseNode {
  std::string symbol;  // empty for a bare terminal inside a longer rule
  std::size_t begin = 0, end = 0;  // word span [begin, end)
  std::string word;    // set on leaves
  std::vector<ParseNode> children;
  int rule = -1;       // CNF rule index: binary, or lexical when a leaf

  bool leaf() const { return children.empty(); }
  bool operator==(const ParseNode &o) const {
    return symbol == o.symbol && begin == o.begin && end == o.end &&
           word == o.word && children == o.children;
  }
};

// Parse with root start symbol, or nullopt. Throws UnknownWord for a word
// outside the terminal set. Words match exactly, then case- and
// diacritic-insensitively.
std::optional<ParseNode> CykParse(const CnfGrammar &g,
                                  std::span<const std::string> words);

// Recognition only: the symbols of the full-span chart cell.
std::set<std::string> CykRoots(const CnfGrammar &g,
                               std::span<const std::string> words);

// Tree over the original rules: unit chains re-expanded, binarization and
// terminal proxies removed.
ParseNode Uncnf(const CnfGrammar &g, const ParseNode &cnf);

// "(S (NP (Det orice) (N femeie)) (VP (V iubește)))".
std::string Bracketed(const ParseNode &node);

// Lowercased words of a sentence, punctuation dropped.
std::vector<std::string> SentenceWords(std::string_view sentence);

}  // namespace diasexp

#endif  // DIASEXP_TOYGRAMMAR_H_
