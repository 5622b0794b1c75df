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

#include "diasexp/qa.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "diasexp/error.h"
#include "diasexp/factstore.h"

namespace diasexp {

namespace {

struct WhEntry {
  std::string_view first;
  std::string_view second;  // empty for single words
  Wh wh;
};

// Bigrams first so "de ce" is not read as "ce".
constexpr WhEntry kWhTable[] = {
    {"pe", "cine", Wh::kPeCine}, {"de", "ce", Wh::kDeCe},
    {"pentru", "ce", Wh::kPentruCe}, {"cine", "", Wh::kCine},
    {"ce", "", Wh::kCe},         {"cui", "", Wh::kCui},
    {"cum", "", Wh::kCum},       {"unde", "", Wh::kUnde},
    {"cand", "", Wh::kCand},
};

Role TargetOf(Wh wh, bool copular) {
  switch (wh) {
    case Wh::kCine: return Role::kSubject;
    case Wh::kCe:
    case Wh::kPeCine: return Role::kDirObj;
    case Wh::kCui: return Role::kIndirObj;
    case Wh::kCum: return copular ? Role::kDirObj : Role::kHow;
    case Wh::kUnde: return Role::kWhere;
    case Wh::kCand: return Role::kWhen;
    case Wh::kDeCe: return Role::kWhy;
    case Wh::kPentruCe: return Role::kGoal;
  }
  return Role::kSubject;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool IsHyphenClitic(std::string_view w, const Lexicon &lex) {
  std::size_t dash = w.find('-');
  return dash != std::string_view::npos && dash > 0 &&
         lex.Contains(Table::kClitics, w.substr(0, dash + 1));
}

// Drops clitic pronouns (and the clitic half of "s-ar"); keeps negation and
// auxiliaries. The head is replaced by the question's own verb form.
std::string RenderPredicate(std::string_view predicate, std::string_view head,
                            const Lexicon &lex) {
  std::vector<std::string> words = Words(predicate);
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string &w = words[i];
    bool last = i + 1 == words.size();
    if (!last && IsHyphenClitic(w, lex)) {
      kept.push_back(w.substr(w.find('-') + 1));
      continue;
    }
    if (!last && lex.Contains(Table::kClitics, w) &&
        !lex.Contains(Table::kAuxiliaries, w)) {
      continue;
    }
    kept.push_back(last && !head.empty() ? std::string(head) : w);
  }
  std::string out;
  for (const std::string &w : kept) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out.empty() ? std::string(predicate) : out;
}

// Fitted to the story data: "Cum este X?" asks for plain qualities, so
// predicatives carrying a time, an object or a prepositional attribute
// ("prietena lui Adrian") are not answers.
bool PlainPredicative(const SentenceRecord &rec, const Lexicon &lex) {
  if (rec.has(Role::kWhen) || rec.has(Role::kIndirObj) ||
      rec.has(Role::kAttributeIo)) {
    return false;
  }
  if (rec.has(Role::kAttributeDo)) {
    TokenList t = Tokenize(rec.get(Role::kAttributeDo)->text);
    if (!t.empty() && lex.MatchPrefix(t, 0)) return false;
  }
  return true;
}

bool Preposed(const SentenceRecord &rec, Role attr, Role head) {
  const auto &a = rec.get(attr);
  const auto &h = rec.get(head);
  if (a->range && h->range) return a->range->first < h->range->first;
  std::size_t pa = rec.raw.find(a->text);
  std::size_t ph = rec.raw.find(h->text);
  return pa != std::string::npos && ph != std::string::npos && pa < ph;
}

}  // namespace

std::string_view WhName(Wh wh) {
  switch (wh) {
    case Wh::kCine: return "cine";
    case Wh::kCe: return "ce";
    case Wh::kPeCine: return "pe cine";
    case Wh::kCui: return "cui";
    case Wh::kCum: return "cum";
    case Wh::kUnde: return "unde";
    case Wh::kCand: return "când";
    case Wh::kDeCe: return "de ce";
    case Wh::kPentruCe: return "pentru ce";
  }
  return "";
}

std::optional<WhMatch> MatchWhWord(std::span<const Token> tokens) {
  if (tokens.empty() || !tokens[0].is_word()) return std::nullopt;
  for (const WhEntry &e : kWhTable) {
    if (tokens[0].folded != e.first) continue;
    if (e.second.empty()) return WhMatch{e.wh, 1};
    if (tokens.size() > 1 && tokens[1].is_word() && tokens[1].folded == e.second) {
      return WhMatch{e.wh, 2};
    }
  }
  return std::nullopt;
}

Question ParseQuestion(std::span<const Token> tokens, const Lexicon &lex,
                       const ResolutionMemory &mem) {
  if (tokens.empty()) throw EmptyInput();
  auto wh = MatchWhWord(tokens);
  if (!wh) throw UnknownWhWord(tokens[0].surface);
  Question q;
  q.wh = wh->wh;
  q.raw = JoinSurface(tokens);
  TokenList rest(tokens.begin() + static_cast<std::ptrdiff_t>(wh->length),
                 tokens.end());
  AnalysisOutcome out = Analyze(rest, lex, mem, AnalysisMode::kQuestion);
  // Questions never ask back, so the record is always present.
  const SentenceRecord &rec = *out.record;
  q.copular = rec.predicative;
  q.target = TargetOf(q.wh, q.copular);
  for (Role r : kAllRoles) {
    if (r == q.target || !rec.has(r)) continue;
    q.constraints[r] = rec.get(r)->text;
  }
  std::vector<std::string> pw = Words(rec.get(Role::kPredicate)->text);
  q.predicate_head = pw.empty() ? std::string() : pw.back();
  return q;
}

std::vector<AnswerLine> AnswerLines(const Question &q, const Story &story,
                                    const Lexicon &lex) {
  std::vector<AnswerLine> out;
  std::set<std::string> seen;
  bool io_first = q.target == Role::kDirObj && q.constraints.count(Role::kIndirObj);
  for (const SentenceRecord *rec : story.Query(q.constraints)) {
    if (!rec->has(q.target)) continue;
    if (q.wh == Wh::kCum && q.copular && !PlainPredicative(*rec, lex)) continue;

    std::vector<Role> order;
    for (Role r : kAllRoles) {
      bool wanted = r == Role::kSubject || r == Role::kPredicate ||
                    r == q.target || q.constraints.count(r);
      if (auto head = HeadOf(r); head && *head == q.target && rec->has(r)) {
        wanted = wanted || Preposed(*rec, r, q.target);
      }
      if (wanted && rec->has(r)) order.push_back(r);
    }
    if (io_first) {
      auto io = std::find(order.begin(), order.end(), Role::kIndirObj);
      auto d = std::find_if(order.begin(), order.end(), [](Role r) {
        return r == Role::kDirObj || r == Role::kAttributeDo;
      });
      if (io != order.end() && d != order.end() && d < io) {
        Role moved = *io;
        order.erase(io);
        order.insert(d, moved);
      }
    }
    // A pre-posed attribute goes right before its head.
    if (auto attr = AttributeOf(q.target)) {
      auto a = std::find(order.begin(), order.end(), *attr);
      auto h = std::find(order.begin(), order.end(), q.target);
      if (a != order.end() && h != order.end() && a > h) {
        order.erase(a);
        order.insert(std::find(order.begin(), order.end(), q.target), *attr);
      }
    }

    std::string text;
    for (Role r : order) {
      std::string part;
      if (r == Role::kPredicate) {
        part = RenderPredicate(rec->get(r)->text, q.predicate_head, lex);
      } else if (auto it = q.constraints.find(r); it != q.constraints.end()) {
        part = it->second;
      } else {
        part = rec->get(r)->text;
      }
      if (!text.empty()) text += ' ';
      text += part;
    }
    text = Capitalize(text) + ".";
    if (seen.insert(text).second) out.push_back({text, rec->seq});
  }
  return out;
}

std::vector<std::string> Answer(const Question &q, const Story &story,
                                const Lexicon &lex) {
  std::vector<std::string> out;
  for (AnswerLine &l : AnswerLines(q, story, lex)) out.push_back(std::move(l.text));
  if (out.empty()) out.emplace_back(kNoAnswer);
  return out;
}

std::string HeadVerb(std::string_view predicate, const Lexicon &lex) {
  std::vector<std::string> words = Words(predicate);
  if (words.empty()) return "";
  // Negation, clitics and auxiliaries all precede the head.
  return Fold(words.back());
}

bool SamePredicateHead(std::string_view a, std::string_view b,
                       const Lexicon &lex) {
  auto canon = [&](std::string_view p) {
    std::string h = HeadVerb(p, lex);
    return h == "e" ? std::string("este") : h;
  };
  return canon(a) == canon(b);
}

}  // namespace diasexp
