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

#include "diasexp/analyzer.h"

#include <algorithm>
#include <set>

#include "diasexp/error.h"
#include "diasexp/morphology.h"

namespace diasexp {

std::string Trigger::Label() const {
  switch (kind) {
    case TriggerKind::kPrefix: return "prefix " + detail;
    case TriggerKind::kEnding: return "ending " + detail;
    case TriggerKind::kPosition: return "position";
    case TriggerKind::kPositionAfterCopula: return "position-after-copula";
    case TriggerKind::kAdverbList: return "adverb-list " + detail;
    case TriggerKind::kWordList: return "word-list " + detail;
    case TriggerKind::kToBeForm: return "to-be-form";
    case TriggerKind::kVerbGroup: return "verb-group";
    case TriggerKind::kUserChoice: return "user-choice";
    case TriggerKind::kLearned: return "learned";
  }
  return "position";
}

std::optional<Role> ResolutionMemory::Lookup(const std::string &key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string ResolutionMemory::Key(const std::string &trigger,
                                  std::optional<Role> prev, bool copular) {
  std::string key = trigger;
  key += '|';
  key += prev ? std::string(FieldName(*prev)) : std::string("none");
  key += copular ? "|1" : "|0";
  return key;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Reading {
  Role role;
  TokenRange range;
  Trigger trigger;
  bool noun = false;  // opens a noun part that may take attributes
};

class SentenceAnalyzer {
 public:
  SentenceAnalyzer(std::span<const Token> tokens, const Lexicon &lex,
                   const ResolutionMemory &mem, AnalysisMode mode,
                   const std::map<TokenRange, std::optional<Role>> &choices,
                   const std::vector<TokenRange> &user_resolved)
      : tokens_(tokens),
        lex_(lex),
        mem_(mem),
        mode_(mode),
        choices_(choices),
        user_resolved_(user_resolved),
        owner_(tokens.size(), kNone),
        seg_end_(tokens.size(), tokens.size()) {}

  AnalysisOutcome Run();

 private:
  // Token classification.
  bool Word(std::size_t i) const {
    return i < tokens_.size() && tokens_[i].is_word();
  }
  bool In(Table t, std::size_t i) const {
    return Word(i) && lex_.Contains(t, tokens_[i].surface);
  }
  bool IsToBe(std::size_t i) const { return In(Table::kFormsOfToBe, i); }
  bool IsNeg(std::size_t i) const { return In(Table::kNegations, i); }
  bool IsAux(std::size_t i) const { return In(Table::kAuxiliaries, i); }
  bool IsHyphenClitic(std::size_t i) const;
  bool IsClitic(std::size_t i) const { return In(Table::kClitics, i); }
  bool HasVerbEnding(std::size_t i) const;
  bool IsIndicator(std::size_t i) const {
    return lex_.MatchPrefix(tokens_, i).has_value();
  }
  bool IsAdverb(std::size_t i) const {
    return In(Table::kAdvWhen, i) || In(Table::kAdvWhere, i) ||
           In(Table::kAdvHow, i);
  }
  bool IsListWord(std::size_t i) const {
    return In(Table::kAdjectives, i) || In(Table::kPossessionWords, i);
  }
  bool IsCue(std::size_t i) const;
  std::optional<EndingAnalysis> Ending(std::size_t i) const;

  // Stages.
  void Segment();
  void FindPredicate();
  void AnalyzeSubjectRegion();
  bool AnalyzePostPredicate();
  bool HandlePrefix(std::size_t i, const PrefixMatch &m);
  bool HandleBare(std::size_t i);
  void HandleListWord(std::size_t i);
  void FlushPreposed();

  // Bookkeeping.
  std::size_t AddPart(Role role, TokenRange range, Trigger trigger,
                      bool noun = false);
  void Extend(std::size_t part, std::size_t i);
  std::size_t RunEnd(std::size_t from) const;
  std::optional<Role> PrevRole(std::size_t i) const;
  bool HasRole(Role r) const;
  bool Resolve(std::vector<Reading> readings, const std::string &trigger,
               std::size_t at, TokenRange word_range);
  std::string Surface(TokenRange r) const;

  std::span<const Token> tokens_;
  const Lexicon &lex_;
  const ResolutionMemory &mem_;
  AnalysisMode mode_;
  const std::map<TokenRange, std::optional<Role>> &choices_;
  const std::vector<TokenRange> &user_resolved_;

  std::vector<std::size_t> owner_;
  std::vector<std::size_t> seg_end_;
  std::vector<Constituent> parts_;
  std::set<std::size_t> noun_parts_;
  std::set<std::size_t> predicative_parts_;
  std::set<std::size_t> deferred_;

  TokenRange predicate_;
  bool copular_ = false;
  // Noun part the next attribute would attach to.
  std::size_t noun_head_ = kNone;
  std::vector<std::size_t> preposed_;
  std::optional<Clarification> pending_;
};

bool SentenceAnalyzer::IsHyphenClitic(std::size_t i) const {
  if (!Word(i)) return false;
  const std::string &s = tokens_[i].surface;
  std::size_t dash = s.find('-');
  if (dash == std::string::npos || dash == 0) return false;
  return lex_.Contains(Table::kClitics, s.substr(0, dash + 1));
}

bool SentenceAnalyzer::HasVerbEnding(std::size_t i) const {
  if (!Word(i)) return false;
  std::string lowered = Lower(tokens_[i].surface);
  const std::string &folded = tokens_[i].folded;
  // Without diacritics "-este" is as good as "-ește".
  bool plain = lowered == folded;
  for (const std::string &e : lex_.entries(Table::kVerbEndings)) {
    std::string key = plain ? Fold(e) : e;
    const std::string &w = plain ? folded : lowered;
    if (w.size() > key.size() && w.compare(w.size() - key.size(), key.size(), key) == 0 &&
        Utf8Length(w) - Utf8Length(key) >= kMinStemLength) {
      return true;
    }
  }
  return false;
}

bool SentenceAnalyzer::IsCue(std::size_t i) const {
  if (IsToBe(i) || IsNeg(i) || IsHyphenClitic(i)) return true;
  bool next_word = Word(i + 1);
  if (IsClitic(i) && next_word) {
    // "o" doubles as the indefinite article: demand a verb after it.
    if (In(Table::kPrefDo, i)) {
      return IsToBe(i + 1) || IsAux(i + 1) || HasVerbEnding(i + 1);
    }
    return !IsIndicator(i + 1);
  }
  if (IsAux(i) && next_word && !IsIndicator(i + 1)) return true;
  if (HasVerbEnding(i)) return i > 0 || mode_ == AnalysisMode::kQuestion;
  return false;
}

std::optional<EndingAnalysis> SentenceAnalyzer::Ending(std::size_t i) const {
  auto ea = AnalyzeEnding(Lower(tokens_[i].surface), lex_);
  if (!ea) return ea;
  // Proper names carry no enclitic article in the nominative ("Elena").
  if (tokens_[i].capitalized()) {
    ea->tables.erase(Table::kTDo);
    if (ea->tables.empty()) return std::nullopt;
  }
  return ea;
}

void SentenceAnalyzer::Segment() {
  std::size_t end = tokens_.size();
  for (std::size_t i = tokens_.size(); i > 0; --i) {
    if (!tokens_[i - 1].is_word()) end = i - 1;
    seg_end_[i - 1] = tokens_[i - 1].is_word() ? end : i - 1;
  }
}

void SentenceAnalyzer::FindPredicate() {
  std::size_t start = kNone;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!Word(i)) continue;
    if (auto m = lex_.MatchPrefix(tokens_, i);
        m && (m->has(Table::kPrefWhy) || m->has(Table::kPrefGoal))) {
      // Subordinate clauses never hold the main predicate.
      i = seg_end_[i];
      continue;
    }
    if (i > 0 && tokens_[i].capitalized()) continue;
    if (IsCue(i)) {
      start = i;
      break;
    }
  }
  if (start == kNone) {
    // No cue: the first plain word after the opening one.
    std::size_t from = mode_ == AnalysisMode::kQuestion ? 0 : 1;
    for (std::size_t i = from; i < tokens_.size() && Word(i); ++i) {
      if (tokens_[i].capitalized() || IsIndicator(i) || IsAdverb(i) ||
          IsListWord(i) || Ending(i)) {
        continue;
      }
      start = i;
      break;
    }
  }
  if (start == kNone) throw NoPredicate(JoinSurface(tokens_));

  std::size_t j = start;
  bool took_aux = false;
  while (Word(j)) {
    if (IsToBe(j)) {
      copular_ = true;
      ++j;
      break;
    }
    if (!took_aux && (IsNeg(j) || (IsClitic(j) && Word(j + 1) && j + 1 < tokens_.size()))) {
      ++j;
      continue;
    }
    if (IsHyphenClitic(j) && Word(j + 1)) {
      took_aux = true;
      ++j;
      continue;
    }
    if (IsAux(j) && Word(j + 1) && !IsIndicator(j + 1)) {
      took_aux = true;
      ++j;
      continue;
    }
    ++j;  // main verb
    break;
  }
  predicate_ = {start, j - 1};
  AddPart(Role::kPredicate, predicate_,
          {copular_ ? TriggerKind::kToBeForm : TriggerKind::kVerbGroup, {}});
}

void SentenceAnalyzer::AnalyzeSubjectRegion() {
  std::size_t i = 0;
  bool first_group = true;
  while (i < predicate_.first) {
    if (!Word(i)) {
      ++i;
      continue;
    }
    std::size_t end = std::min(seg_end_[i], predicate_.first);
    if (first_group) {
      first_group = false;
      std::size_t k = i;
      if (IsAdverb(k) && end - k > 1) {
        Role r = In(Table::kAdvWhen, k) ? Role::kWhen
                 : In(Table::kAdvWhere, k) ? Role::kWhere : Role::kHow;
        AddPart(r, {k, k}, {TriggerKind::kAdverbList, "adv"});
        ++k;
      }
      std::size_t head_end = k;
      if (In(Table::kPrefDo, k) && k + 1 < end) head_end = k + 1;
      while (head_end + 1 < end && tokens_[head_end + 1].capitalized() &&
             !Ending(head_end + 1)) {
        ++head_end;
      }
      AddPart(Role::kSubject, {k, head_end}, {TriggerKind::kPosition, {}});
      if (head_end + 1 < end) {
        std::size_t a = head_end + 1;
        Trigger t{TriggerKind::kPosition, {}};
        if (auto m = lex_.MatchPrefix(tokens_, a); m && m->has(Table::kPrefAttrib)) {
          t = {TriggerKind::kPrefix, "pref_attrib"};
        } else if (IsListWord(a)) {
          t = {TriggerKind::kWordList, In(Table::kAdjectives, a) ? "adjectives"
                                                                 : "possession_words"};
        } else if (auto ea = Ending(a)) {
          t = {TriggerKind::kEnding, std::string(TableName(*ea->tables.begin())) +
                                         ":" + ea->ending};
        }
        AddPart(Role::kAttribSub, {a, end - 1}, t);
      }
    } else {
      // Apposition or fronted adverbial between commas.
      auto m = lex_.MatchPrefix(tokens_, i);
      std::optional<Role> adverbial;
      std::string table;
      if (m && !m->has(Table::kPrefAttrib)) {
        for (auto [t, r] : {std::pair{Table::kPrefWhy, Role::kWhy},
                            {Table::kPrefGoal, Role::kGoal},
                            {Table::kPrefWhere, Role::kWhere},
                            {Table::kPrefWhen, Role::kWhen},
                            {Table::kPrefHow, Role::kHow}}) {
          if (m->has(t)) {
            adverbial = r;
            table = std::string(TableName(t));
            break;
          }
        }
      }
      if (adverbial) {
        AddPart(*adverbial, {i, end - 1}, {TriggerKind::kPrefix, table});
      } else if (end - i == 1 && IsAdverb(i)) {
        Role r = In(Table::kAdvWhen, i) ? Role::kWhen
                 : In(Table::kAdvWhere, i) ? Role::kWhere : Role::kHow;
        AddPart(r, {i, i}, {TriggerKind::kAdverbList, "adv"});
      } else {
        Trigger t{TriggerKind::kPosition, {}};
        if (m && m->has(Table::kPrefAttrib)) t = {TriggerKind::kPrefix, "pref_attrib"};
        AddPart(Role::kAttribSub, {i, end - 1}, t);
      }
    }
    i = end;
  }
}

std::size_t SentenceAnalyzer::AddPart(Role role, TokenRange range,
                                      Trigger trigger, bool noun) {
  std::size_t idx = parts_.size();
  parts_.push_back({role, Surface(range), range, std::move(trigger)});
  for (std::size_t k = range.first; k <= range.last; ++k) owner_[k] = idx;
  if (noun) {
    noun_parts_.insert(idx);
    noun_head_ = idx;
    if (copular_ && role == Role::kDirObj &&
        std::count_if(parts_.begin(), parts_.end(),
                      [](const Constituent &c) { return c.role == Role::kDirObj; }) == 1) {
      predicative_parts_.insert(idx);
    }
    // Attributes waiting in front of their head ("altă fată").
    if (auto attr = AttributeOf(role)) {
      for (std::size_t p : preposed_) {
        AddPart(*attr, {p, p}, {TriggerKind::kWordList, "adjectives"});
      }
      preposed_.clear();
      noun_head_ = idx;
    }
  } else if (!HeadOf(role)) {
    noun_head_ = kNone;
  }
  return idx;
}

void SentenceAnalyzer::Extend(std::size_t part, std::size_t i) {
  parts_[part].range.last = i;
  parts_[part].text += " ";
  parts_[part].text += tokens_[i].surface;
  owner_[i] = part;
}

std::string SentenceAnalyzer::Surface(TokenRange r) const {
  return JoinSurface(tokens_.subspan(r.first, r.last - r.first + 1));
}

std::size_t SentenceAnalyzer::RunEnd(std::size_t from) const {
  std::size_t end = seg_end_[from];
  std::size_t j = from + 1;
  while (j < end && !IsIndicator(j) && !IsAdverb(j)) ++j;
  return j - 1;
}

std::optional<Role> SentenceAnalyzer::PrevRole(std::size_t i) const {
  for (std::size_t k = i; k > 0; --k) {
    if (Word(k - 1) && owner_[k - 1] != kNone) return parts_[owner_[k - 1]].role;
  }
  return std::nullopt;
}

bool SentenceAnalyzer::HasRole(Role r) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [r](const Constituent &c) { return c.role == r; });
}

// Picks one reading: an earlier answer for these words, then the memory,
// then (questions only) the first reading. Otherwise asks.
bool SentenceAnalyzer::Resolve(std::vector<Reading> readings,
                               const std::string &trigger, std::size_t at,
                               TokenRange word_range) {
  const Reading *chosen = nullptr;
  Trigger provenance;
  std::string key = ResolutionMemory::Key(trigger, PrevRole(at), copular_);
  if (readings.size() == 1) {
    chosen = &readings.front();
    provenance = chosen->trigger;
  } else if (auto it = choices_.find(word_range); it != choices_.end()) {
    if (!it->second) {
      for (std::size_t k = word_range.first; k <= word_range.last; ++k) {
        deferred_.insert(k);
      }
      return true;
    }
    for (const Reading &r : readings) {
      if (r.role == *it->second) chosen = &r;
    }
    bool by_user = std::find(user_resolved_.begin(), user_resolved_.end(),
                             word_range) != user_resolved_.end();
    provenance = {by_user ? TriggerKind::kUserChoice : TriggerKind::kLearned, {}};
  } else if (auto role = mem_.Lookup(key)) {
    for (const Reading &r : readings) {
      if (r.role == *role) chosen = &r;
    }
    provenance = {TriggerKind::kLearned, {}};
  } else if (mode_ == AnalysisMode::kQuestion) {
    chosen = &readings.front();
    provenance = chosen->trigger;
  }
  if (chosen == nullptr) {
    Clarification c;
    c.id = "c" + std::to_string(word_range.first) + "-" +
           std::to_string(word_range.last);
    c.word_range = word_range;
    c.words = Surface(word_range);
    c.context_key = key;
    for (const Reading &r : readings) {
      if (std::find(c.options.begin(), c.options.end(), r.role) == c.options.end()) {
        c.options.push_back(r.role);
      }
    }
    if (c.options.size() > 3) c.options.resize(3);
    c.prompt = "What is \"" + c.words + "\" in \"" + JoinSurface(tokens_) + "\"?";
    pending_ = std::move(c);
    return false;
  }
  AddPart(chosen->role, chosen->range, provenance, chosen->noun);
  return true;
}

bool SentenceAnalyzer::HandlePrefix(std::size_t i, const PrefixMatch &m) {
  std::size_t seg_last = seg_end_[i] - 1;
  std::size_t after = i + m.length;
  Trigger pt{TriggerKind::kPrefix, std::string(TableName(m.table()))};
  auto prefix = [&](Table t) { return Trigger{TriggerKind::kPrefix, std::string(TableName(t))}; };
  // Indicator plus one noun ("pe Elena", "cu oamenii", "o floare").
  TokenRange object{i, after < seg_end_[i] ? after : after - 1};
  if (object.last == after && In(Table::kPrefDo, after) && after + 1 <= seg_last) {
    object.last = after + 1;  // "pe o fată"
  }
  std::string key = "prefix:" + m.entry;

  if (m.has(Table::kPrefWhy)) {
    AddPart(Role::kWhy, {i, seg_last}, prefix(Table::kPrefWhy));
    return true;
  }
  if (m.has(Table::kPrefGoal)) {
    AddPart(Role::kGoal, {i, seg_last}, prefix(Table::kPrefGoal));
    return true;
  }

  bool noun_before = noun_head_ != kNone;
  bool object_before = noun_before && !predicative_parts_.count(noun_head_);

  if (m.has(Table::kPrefDo) && m.has(Table::kPrefWhen)) {
    bool articled = false;
    if (Word(after)) {
      auto ea = Ending(after);
      articled = tokens_[after].capitalized() || (ea && ea->has(Table::kTDo));
    }
    std::vector<Reading> readings = {
        {Role::kDirObj, object, prefix(Table::kPrefDo), true}};
    if (!articled) {
      readings.push_back({Role::kWhen, {i, seg_last}, prefix(Table::kPrefWhen)});
      // "cartea pe masă": a place phrase qualifying the object.
      if (object_before) {
        readings.push_back({*AttributeOf(parts_[noun_head_].role), object,
                            prefix(Table::kPrefDo)});
      }
    }
    return Resolve(readings, key, i, object);
  }
  if (m.has(Table::kPrefAttrib) &&
      (m.has(Table::kPrefIo) || m.has(Table::kPrefWhere))) {
    if (object_before) {
      Role attr = *AttributeOf(parts_[noun_head_].role);
      AddPart(attr, {i, RunEnd(i)}, prefix(Table::kPrefAttrib));
    } else if (m.has(Table::kPrefIo)) {
      AddPart(Role::kIndirObj, object, prefix(Table::kPrefIo), true);
    } else {
      AddPart(Role::kWhere, {i, seg_last}, prefix(Table::kPrefWhere));
    }
    return true;
  }
  if (m.has(Table::kPrefIo)) {
    std::vector<Reading> readings = {
        {Role::kIndirObj, object, prefix(Table::kPrefIo), true}};
    // "lui" is also a genitive marker: "prietena lui Adrian".
    if (noun_before && lex_.Contains(Table::kTPos, m.entry)) {
      readings.push_back({*AttributeOf(parts_[noun_head_].role), object,
                          prefix(Table::kPrefIo)});
    }
    return Resolve(readings, key, i, object);
  }
  if (m.has(Table::kPrefDo)) {
    AddPart(Role::kDirObj, object, pt, true);
    return true;
  }
  for (auto [t, r] : {std::pair{Table::kPrefWhere, Role::kWhere},
                      {Table::kPrefWhen, Role::kWhen},
                      {Table::kPrefHow, Role::kHow}}) {
    if (m.has(t)) {
      AddPart(r, {i, seg_last}, prefix(t));
      return true;
    }
  }
  // Plain pref_attrib: "cel bun", "care ...".
  if (noun_before) {
    AddPart(*AttributeOf(parts_[noun_head_].role), {i, RunEnd(i)},
            prefix(Table::kPrefAttrib));
  } else {
    AddPart(Role::kDirObj, {i, RunEnd(i)}, prefix(Table::kPrefAttrib), true);
  }
  return true;
}

void SentenceAnalyzer::HandleListWord(std::size_t i) {
  Trigger t{TriggerKind::kWordList,
            In(Table::kAdjectives, i) ? "adjectives" : "possession_words"};
  if (noun_head_ != kNone) {
    std::size_t prev = owner_[i - 1];
    Role attr = *AttributeOf(parts_[noun_head_].role);
    if (prev != kNone && parts_[prev].role == attr) {
      Extend(prev, i);
    } else {
      AddPart(attr, {i, i}, t);
    }
  } else if (copular_ && !HasRole(Role::kDirObj)) {
    AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPositionAfterCopula, {}}, true);
  } else {
    preposed_.push_back(i);
  }
}

bool SentenceAnalyzer::HandleBare(std::size_t i) {
  const Token &tok = tokens_[i];
  auto ea = Ending(i);
  bool after_copula = copular_ && !HasRole(Role::kDirObj);

  if (mode_ == AnalysisMode::kQuestion && tok.capitalized() &&
      !HasRole(Role::kSubject) && !(ea && (ea->has(Table::kTIo) || ea->has(Table::kTPos)))) {
    AddPart(Role::kSubject, {i, i}, {TriggerKind::kPosition, {}});
    return true;
  }
  if (ea && (ea->has(Table::kTIo) || ea->has(Table::kTPos))) {
    Table table = ea->has(Table::kTIo) ? Table::kTIo : Table::kTPos;
    Trigger t{TriggerKind::kEnding, std::string(TableName(table)) + ":" + ea->ending};
    if (after_copula && !tok.capitalized()) {
      AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPositionAfterCopula, {}}, true);
      return true;
    }
    // A bare genitive name cannot follow an indefinite head ("o floare Elenei").
    bool indefinite_head = false;
    if (noun_head_ != kNone) {
      std::string det = Lower(tokens_[parts_[noun_head_].range.first].surface);
      indefinite_head = det == "o" || det == "un";
    }
    std::vector<Reading> readings;
    if (ea->has(Table::kTIo)) readings.push_back({Role::kIndirObj, {i, i}, t, true});
    if (noun_head_ != kNone && !(indefinite_head && tok.capitalized() && !readings.empty())) {
      Trigger pos{TriggerKind::kEnding, "t_pos:" + ea->ending};
      readings.push_back({*AttributeOf(parts_[noun_head_].role), {i, i}, pos});
    }
    if (readings.empty()) readings.push_back({Role::kIndirObj, {i, i}, t, true});
    return Resolve(readings, "ending:" + ea->ending, i, {i, i});
  }
  if (ea && ea->has(Table::kTDo)) {
    Trigger t{TriggerKind::kEnding, "t_do:" + ea->ending};
    if (after_copula) {
      AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPositionAfterCopula, {}}, true);
    } else if (!HasRole(Role::kDirObj)) {
      AddPart(Role::kDirObj, {i, i}, t, true);
    } else if (noun_head_ != kNone) {
      AddPart(*AttributeOf(parts_[noun_head_].role), {i, i}, t);
    } else {
      AddPart(Role::kDirObj, {i, i}, t, true);
    }
    return true;
  }

  // No ending information: position decides.
  std::size_t prev = i > 0 ? owner_[i - 1] : kNone;
  if (prev != kNone && HeadOf(parts_[prev].role) && noun_head_ != kNone) {
    Extend(prev, i);
  } else if (noun_head_ != kNone) {
    AddPart(*AttributeOf(parts_[noun_head_].role), {i, i}, {TriggerKind::kPosition, {}});
  } else if (after_copula) {
    AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPositionAfterCopula, {}}, true);
  } else if (!copular_ && !HasRole(Role::kDirObj)) {
    AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPosition, {}}, true);
  } else if (prev != kNone && parts_[prev].role != Role::kPredicate) {
    Extend(prev, i);
  } else {
    AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPosition, {}}, true);
  }
  return true;
}

void SentenceAnalyzer::FlushPreposed() {
  if (preposed_.empty()) return;
  std::vector<std::size_t> words;
  words.swap(preposed_);
  for (std::size_t p : words) {
    std::size_t head = kNone;
    for (std::size_t k = parts_.size(); k > 0; --k) {
      if (noun_parts_.count(k - 1)) {
        head = k - 1;
        break;
      }
    }
    if (head != kNone) {
      AddPart(*AttributeOf(parts_[head].role), {p, p},
              {TriggerKind::kWordList, "adjectives"});
    } else {
      AddPart(Role::kDirObj, {p, p}, {TriggerKind::kPosition, {}}, true);
    }
  }
}

bool SentenceAnalyzer::AnalyzePostPredicate() {
  noun_head_ = kNone;
  for (std::size_t i = predicate_.last + 1; i < tokens_.size(); ++i) {
    if (!Word(i)) {
      FlushPreposed();
      noun_head_ = kNone;
      continue;
    }
    if (owner_[i] != kNone || deferred_.count(i)) continue;
    if (auto m = lex_.MatchPrefix(tokens_, i)) {
      if (!HandlePrefix(i, *m)) return false;
      continue;
    }
    if (IsAdverb(i)) {
      if (copular_ && !HasRole(Role::kDirObj) && In(Table::kAdjectives, i)) {
        AddPart(Role::kDirObj, {i, i}, {TriggerKind::kPositionAfterCopula, {}}, true);
        continue;
      }
      Table t = In(Table::kAdvWhen, i)    ? Table::kAdvWhen
                : In(Table::kAdvWhere, i) ? Table::kAdvWhere
                                          : Table::kAdvHow;
      Role r = t == Table::kAdvWhen    ? Role::kWhen
               : t == Table::kAdvWhere ? Role::kWhere
                                       : Role::kHow;
      AddPart(r, {i, i}, {TriggerKind::kAdverbList, std::string(TableName(t))});
      continue;
    }
    if (IsListWord(i)) {
      HandleListWord(i);
      continue;
    }
    if (!HandleBare(i)) return false;
  }
  FlushPreposed();
  return true;
}

AnalysisOutcome SentenceAnalyzer::Run() {
  AnalysisOutcome out;
  out.tokens.assign(tokens_.begin(), tokens_.end());
  out.raw = JoinSurface(tokens_);
  out.choices = choices_;
  out.user_resolved = user_resolved_;

  if (std::none_of(tokens_.begin(), tokens_.end(),
                   [](const Token &t) { return t.is_word(); })) {
    throw EmptySentence();
  }
  Segment();
  FindPredicate();
  AnalyzeSubjectRegion();
  bool done = AnalyzePostPredicate();

  std::vector<Constituent> ordered = parts_;
  std::sort(ordered.begin(), ordered.end(),
            [](const Constituent &a, const Constituent &b) {
              return a.range.first < b.range.first;
            });
  out.constituents = ordered;
  if (!done) {
    out.pending = pending_;
    return out;
  }
  out.record = BuildRecord(ordered, copular_, out.raw);
  return out;
}

}  // namespace

SentenceRecord BuildRecord(std::span<const Constituent> constituents,
                           bool predicative, std::string raw) {
  SentenceRecord rec;
  rec.predicative = predicative;
  rec.raw = std::move(raw);
  for (Role role : kAllRoles) {
    std::vector<const Constituent *> parts;
    for (const Constituent &c : constituents) {
      if (c.role == role) parts.push_back(&c);
    }
    if (parts.empty()) continue;
    std::sort(parts.begin(), parts.end(), [](auto *a, auto *b) {
      return a->range.first < b->range.first;
    });
    std::string text;
    for (const Constituent *c : parts) {
      if (!text.empty()) text += ' ';
      text += c->text;
    }
    rec.set(role, text, parts.front()->trigger.Label(),
            TokenRange{parts.front()->range.first, parts.back()->range.last});
  }
  return rec;
}

AnalysisOutcome Analyze(std::span<const Token> tokens, const Lexicon &lex,
                        const ResolutionMemory &mem, AnalysisMode mode) {
  static const std::map<TokenRange, std::optional<Role>> kNoChoices;
  static const std::vector<TokenRange> kNoUsers;
  return SentenceAnalyzer(tokens, lex, mem, mode, kNoChoices, kNoUsers).Run();
}

AnalysisOutcome AnalyzeText(std::string_view raw, const Lexicon &lex,
                            const ResolutionMemory &mem) {
  TokenList tokens = Tokenize(raw);
  return Analyze(tokens, lex, mem);
}

std::pair<AnalysisOutcome, ResolutionMemory> ResolveClarification(
    const AnalysisOutcome &pending, const std::string &id, Role choice,
    const ResolutionMemory &mem, const Lexicon &lex) {
  if (!pending.pending || pending.pending->id != id) {
    throw UnknownClarification(id);
  }
  const Clarification &c = *pending.pending;
  if (std::find(c.options.begin(), c.options.end(), choice) == c.options.end()) {
    throw InvalidChoice(std::string(RoleName(choice)) + " is not an option for \"" +
                        c.words + "\"");
  }
  auto choices = pending.choices;
  choices[c.word_range] = choice;
  auto users = pending.user_resolved;
  users.push_back(c.word_range);
  ResolutionMemory learned = mem;
  learned.Learn(c.context_key, choice);
  AnalysisOutcome next = SentenceAnalyzer(pending.tokens, lex, learned,
                                          AnalysisMode::kAssertion, choices, users)
                             .Run();
  return {std::move(next), std::move(learned)};
}

AnalysisOutcome DeferClarification(const AnalysisOutcome &pending,
                                   const ResolutionMemory &mem,
                                   const Lexicon &lex) {
  if (!pending.pending) throw UnknownClarification("");
  auto choices = pending.choices;
  choices[pending.pending->word_range] = std::nullopt;
  return SentenceAnalyzer(pending.tokens, lex, mem, AnalysisMode::kAssertion,
                          choices, pending.user_resolved)
      .Run();
}

std::vector<Explanation> Explain(const SentenceRecord &record) {
  std::vector<Explanation> out;
  for (Role r : kAllRoles) {
    if (!record.has(r)) continue;
    out.push_back({r, record.get(r)->text, record.get(r)->trigger});
  }
  return out;
}

}  // namespace diasexp
