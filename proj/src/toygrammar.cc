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

#include "diasexp/toygrammar.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <utility>

#include "diasexp/error.h"
#include "diasexp/textnorm.h"

namespace diasexp {

namespace {

// The grammar for Romanian from the introduction, repaired so that VP
// terminates (VP -> V | V NP) and AP coordinates with the defined CA.
constexpr std::string_view kToyGrammar = R"(# Toy grammar for Romanian.
%start S
S    -> NP VP
NP   -> Pron | N | Det N | NP AP
AP   -> A | AP CA
CA   -> C A
VP   -> V | V NP
Det  -> "orice" | "fiecare" | "o" | "un"
Pron -> "el" | "ea"
N    -> "bărbat" | "femeie" | "pisică" | "șoarece"
V    -> "iubește" | "urăște"
A    -> "frumoasă" | "deșteaptă" | "deștept"
C    -> "și" | "sau"
)";

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on '|' outside quotes.
std::vector<std::string> Alternatives(std::string_view rhs) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : rhs) {
    if (c == '"') quoted = !quoted;
    if (c == '|' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::vector<Symbol> Items(const std::string &alt, const std::string &file,
                          int line) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < alt.size()) {
    if (alt[i] == ' ' || alt[i] == '\t' || alt[i] == '\r') {
      ++i;
      continue;
    }
    if (alt[i] == '"') {
      std::size_t close = alt.find('"', i + 1);
      if (close == std::string::npos) throw ParseError(file, line, "unterminated quote");
      std::string word = alt.substr(i + 1, close - i - 1);
      if (word.empty()) throw ParseError(file, line, "empty terminal");
      out.push_back({Normalize(word).canonical, true});
      i = close + 1;
      continue;
    }
    std::size_t end = alt.find_first_of(" \t\r\"", i);
    if (end == std::string::npos) end = alt.size();
    out.push_back({alt.substr(i, end - i), false});
    i = end;
  }
  return out;
}

struct WorkRule {
  std::string lhs;
  std::vector<std::string> rhs;
  bool lexical = false;
  std::vector<int> chain;
};

}  // namespace

Cfg Cfg::Parse(std::string_view text, const std::string &file) {
  Cfg g;
  std::optional<std::string> start;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = Trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("%start", 0) == 0) {
      std::string name = Trim(std::string_view(s).substr(6));
      if (name.empty()) throw ParseError(file, line, "%start needs a symbol");
      start = name;
      continue;
    }
    std::size_t arrow = s.find("->");
    if (arrow == std::string::npos) throw ParseError(file, line, "expected '->'");
    std::string lhs = Trim(std::string_view(s).substr(0, arrow));
    if (lhs.empty() || lhs.find_first_of(" \t\"") != std::string::npos) {
      throw ParseError(file, line, "bad left-hand side \"" + lhs + "\"");
    }
    g.nonterminals.insert(lhs);
    if (!start) start = lhs;
    for (const std::string &alt : Alternatives(std::string_view(s).substr(arrow + 2))) {
      CfgRule rule{lhs, Items(alt, file, line)};
      for (const Symbol &sym : rule.rhs) {
        if (sym.terminal) g.terminals.insert(sym.name);
      }
      g.rules.push_back(std::move(rule));
    }
  }
  if (!start) throw ParseError(file, line, "grammar has no rules");
  g.start = *start;
  g.Validate();
  return g;
}

Cfg Cfg::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open grammar file");
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str(), path);
}

const Cfg &Cfg::Toy() {
  static const Cfg g = Parse(kToyGrammar, "<toy>");
  return g;
}

void Cfg::Validate() const {
  if (!nonterminals.count(start)) {
    throw ParseError("", 0, "start symbol " + start + " has no rules");
  }
  for (const CfgRule &r : rules) {
    for (const Symbol &s : r.rhs) {
      if (!s.terminal && !nonterminals.count(s.name)) {
        throw ParseError("", 0, "undeclared symbol " + s.name + " in rule for " + r.lhs);
      }
    }
  }
}

std::string FormatCfg(const Cfg &g) {
  std::string out = "%start " + g.start + "\n";
  for (const CfgRule &r : g.rules) {
    out += r.lhs + " ->";
    for (const Symbol &s : r.rhs) {
      out += ' ';
      out += s.terminal ? "\"" + s.name + "\"" : s.name;
    }
    out += '\n';
  }
  return out;
}

bool CnfGrammar::HasTerminal(std::string_view w) const {
  if (terminals.count(std::string(w))) return true;
  std::string f = Fold(w);
  return std::any_of(terminals.begin(), terminals.end(),
                     [&](const std::string &t) { return Fold(t) == f; });
}

CnfGrammar ToCnf(const Cfg &g) {
  std::vector<WorkRule> work;
  std::map<std::string, std::string> proxy;  // terminal -> #terminal
  for (std::size_t r = 0; r < g.rules.size(); ++r) {
    const CfgRule &rule = g.rules[r];
    int idx = static_cast<int>(r);
    if (rule.rhs.empty()) {
      throw UnsupportedGrammar("epsilon rule for " + rule.lhs + " is not supported");
    }
    if (rule.rhs.size() == 1) {
      work.push_back({rule.lhs, {rule.rhs[0].name}, rule.rhs[0].terminal, {idx}});
      continue;
    }
    // TERM: terminals inside longer rules get proxy symbols.
    std::vector<std::string> names;
    for (const Symbol &s : rule.rhs) {
      if (!s.terminal) {
        names.push_back(s.name);
        continue;
      }
      auto [it, fresh] = proxy.try_emplace(s.name, "#" + s.name);
      if (fresh) work.push_back({it->second, {s.name}, true, {}});
      names.push_back(it->second);
    }
    // BIN: right-branching helper symbols.
    std::string lhs = rule.lhs;
    for (std::size_t k = 0; k + 2 < names.size(); ++k) {
      std::string helper = "@" + rule.lhs + "_" + std::to_string(r) + "_" + std::to_string(k + 1);
      work.push_back({lhs, {names[k], helper}, false, {idx}});
      lhs = helper;
    }
    work.push_back({lhs, {names[names.size() - 2], names.back()}, false, {idx}});
  }

  // UNIT: shortest unit chains from every symbol.
  std::set<std::string> symbols;
  for (const WorkRule &w : work) symbols.insert(w.lhs);
  CnfGrammar cnf;
  cnf.start = g.start;
  cnf.terminals = g.terminals;
  for (const CfgRule &r : g.rules) cnf.source_lhs.push_back(r.lhs);
  std::set<std::pair<std::string, std::vector<std::string>>> seen;
  for (const std::string &a : symbols) {
    std::map<std::string, std::vector<int>> reach{{a, {}}};
    std::deque<std::string> queue{a};
    while (!queue.empty()) {
      std::string b = queue.front();
      queue.pop_front();
      for (const WorkRule &w : work) {
        if (w.lhs != b || w.lexical || w.rhs.size() != 1) continue;
        if (reach.count(w.rhs[0])) continue;
        std::vector<int> chain = reach[b];
        chain.insert(chain.end(), w.chain.begin(), w.chain.end());
        reach[w.rhs[0]] = chain;
        queue.push_back(w.rhs[0]);
      }
    }
    for (const auto &[b, unit_chain] : reach) {
      for (const WorkRule &w : work) {
        if (w.lhs != b || (!w.lexical && w.rhs.size() == 1)) continue;
        if (!seen.insert({a, w.rhs}).second) continue;
        std::vector<int> chain = unit_chain;
        chain.insert(chain.end(), w.chain.begin(), w.chain.end());
        if (w.lexical) {
          cnf.lexical.push_back({a, w.rhs[0], chain});
        } else {
          cnf.binary.push_back({a, w.rhs[0], w.rhs[1], chain});
        }
        cnf.nonterminals.insert(a);
      }
    }
  }
  return cnf;
}

namespace {

struct Back {
  int rule = -1;
  bool lexical = false;
  std::size_t split = 0;
};

class Chart {
 public:
  Chart(const CnfGrammar &g, std::span<const std::string> words)
      : g_(g), n_(words.size()) {
    for (const std::string &s : g.nonterminals) ids_.emplace(s, ids_.size());
    cells_.assign(n_ * (n_ + 1), std::vector<std::optional<Back>>(ids_.size()));
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<int> rules = Lexical(words[i]);
      if (rules.empty()) throw UnknownWord(words[i]);
      for (int r : rules) {
        auto &slot = Cell(i, i + 1)[ids_.at(g.lexical[r].lhs)];
        if (!slot) slot = Back{r, true, 0};
      }
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        std::size_t j = i + len;
        auto &cell = Cell(i, j);
        for (std::size_t k = i + 1; k < j; ++k) {
          const auto &left = Cell(i, k);
          const auto &right = Cell(k, j);
          for (std::size_t r = 0; r < g.binary.size(); ++r) {
            const BinaryRule &b = g.binary[r];
            std::size_t a = ids_.at(b.lhs);
            if (cell[a]) continue;
            auto l = ids_.find(b.left);
            auto rr = ids_.find(b.right);
            if (l == ids_.end() || rr == ids_.end()) continue;
            if (left[l->second] && right[rr->second]) {
              cell[a] = Back{static_cast<int>(r), false, k};
            }
          }
        }
      }
    }
    words_.assign(words.begin(), words.end());
  }

  std::set<std::string> Roots() const {
    std::set<std::string> out;
    if (n_ == 0) return out;
    const auto &cell = Cell(0, n_);
    for (const auto &[s, id] : ids_) {
      if (cell[id]) out.insert(s);
    }
    return out;
  }

  std::optional<ParseNode> Tree(const std::string &root) const {
    if (n_ == 0 || !ids_.count(root) || !Cell(0, n_)[ids_.at(root)]) return std::nullopt;
    return Build(root, 0, n_);
  }

 private:
  std::vector<int> Lexical(const std::string &w) const {
    std::vector<int> exact, folded;
    std::string f = Fold(w);
    std::string lw = Lower(w);
    for (std::size_t r = 0; r < g_.lexical.size(); ++r) {
      const std::string &word = g_.lexical[r].word;
      if (word == w || word == lw) exact.push_back(static_cast<int>(r));
      else if (Fold(word) == f) folded.push_back(static_cast<int>(r));
    }
    return exact.empty() ? folded : exact;
  }

  std::vector<std::optional<Back>> &Cell(std::size_t i, std::size_t j) {
    return cells_[i * (n_ + 1) + j];
  }
  const std::vector<std::optional<Back>> &Cell(std::size_t i, std::size_t j) const {
    return cells_[i * (n_ + 1) + j];
  }

  ParseNode Build(const std::string &sym, std::size_t i, std::size_t j) const {
    const Back &b = *Cell(i, j)[ids_.at(sym)];
    ParseNode node;
    node.symbol = sym;
    node.begin = i;
    node.end = j;
    node.rule = b.rule;
    if (b.lexical) {
      node.word = words_[i];
      return node;
    }
    const BinaryRule &r = g_.binary[b.rule];
    node.children.push_back(Build(r.left, i, b.split));
    node.children.push_back(Build(r.right, b.split, j));
    return node;
  }

  const CnfGrammar &g_;
  std::size_t n_;
  std::map<std::string, std::size_t> ids_;
  std::vector<std::vector<std::optional<Back>>> cells_;
  std::vector<std::string> words_;
};

std::vector<ParseNode> Expand(const CnfGrammar &g, const ParseNode &node) {
  if (!node.symbol.empty() && node.symbol[0] == '@') {
    std::vector<ParseNode> out;
    for (const ParseNode &c : node.children) {
      auto part = Expand(g, c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (!node.symbol.empty() && node.symbol[0] == '#') {
    ParseNode bare;
    bare.begin = node.begin;
    bare.end = node.end;
    bare.word = node.word;
    return {bare};
  }
  const std::vector<int> &chain =
      node.leaf() ? g.lexical[node.rule].chain : g.binary[node.rule].chain;
  ParseNode inner;
  inner.begin = node.begin;
  inner.end = node.end;
  inner.symbol = chain.empty() ? node.symbol : g.source_lhs[chain.back()];
  inner.word = node.word;
  for (const ParseNode &c : node.children) {
    auto part = Expand(g, c);
    inner.children.insert(inner.children.end(), part.begin(), part.end());
  }
  for (std::size_t k = chain.size(); k-- > 1;) {
    ParseNode wrap;
    wrap.symbol = g.source_lhs[chain[k - 1]];
    wrap.begin = node.begin;
    wrap.end = node.end;
    wrap.children.push_back(std::move(inner));
    inner = std::move(wrap);
  }
  return {inner};
}

}  // namespace

std::optional<ParseNode> CykParse(const CnfGrammar &g,
                                  std::span<const std::string> words) {
  if (words.empty()) return std::nullopt;
  return Chart(g, words).Tree(g.start);
}

std::set<std::string> CykRoots(const CnfGrammar &g,
                               std::span<const std::string> words) {
  if (words.empty()) return {};
  return Chart(g, words).Roots();
}

ParseNode Uncnf(const CnfGrammar &g, const ParseNode &cnf) {
  return Expand(g, cnf).front();
}

std::string Bracketed(const ParseNode &node) {
  if (node.leaf()) {
    if (node.symbol.empty()) return node.word;
    return "(" + node.symbol + " " + node.word + ")";
  }
  std::string out = "(" + node.symbol;
  for (const ParseNode &c : node.children) out += " " + Bracketed(c);
  return out + ")";
}

std::vector<std::string> SentenceWords(std::string_view sentence) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(sentence)) {
    if (t.is_word()) out.push_back(Lower(t.surface));
  }
  return out;
}

}  // namespace diasexp
