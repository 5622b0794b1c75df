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

#include "diasexp/batch.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "diasexp/error.h"
#include "diasexp/textnorm.h"
#include "json.hpp"

namespace diasexp {

using json = nlohmann::ordered_json;

namespace {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::size_t, std::string>> Lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    out.emplace_back(pos, std::string(text.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  return out;
}

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<GoldRow> ParseGold(std::string_view text) {
  std::vector<GoldRow> out;
  for (const auto &[offset, line] : Lines(text)) {
    if (Trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw StorageError(std::string("malformed gold line: ") + e.what(), offset);
    }
    if (!j.is_object()) throw StorageError("gold line is not an object", offset);
    if (j.contains("format")) continue;  // optional header
    GoldRow row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string &key = it.key();
      const json &v = it.value();
      if (key == "raw") {
        row.raw = Normalize(v.get<std::string>()).canonical;
      } else if (key == "note") {
        row.note = v.get<std::string>();
      } else if (key == "exclude") {
        for (const json &f : v) {
          auto role = ParseRole(f.get<std::string>());
          if (!role) throw FormatVersionError("unknown gold field \"" + f.get<std::string>() + "\"");
          row.exclude.insert(*role);
        }
      } else if (auto role = ParseRole(key); role && key == FieldName(*role)) {
        if (!v.is_null() && !v.get<std::string>().empty()) {
          row.record.set(*role, Normalize(v.get<std::string>()).canonical);
        }
      } else {
        throw FormatVersionError("unknown gold field \"" + key + "\"");
      }
    }
    if (row.raw.empty()) throw StorageError("gold row without raw text", offset);
    row.record.raw = row.raw;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<GoldRow> LoadGold(const std::filesystem::path &path) {
  return ParseGold(ReadFile(path));
}

Choices ParseChoices(std::string_view text) {
  Choices out;
  for (const auto &[offset, raw] : Lines(text)) {
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw StorageError("choices line needs a tab", offset);
    auto role = ParseRole(Trim(std::string_view(line).substr(tab + 1)));
    if (!role) throw StorageError("unknown role in choices line", offset);
    out[FoldPhrase(line.substr(0, tab))] = *role;
  }
  return out;
}

Choices LoadChoices(const std::filesystem::path &path) {
  return ParseChoices(ReadFile(path));
}

std::vector<std::string> LoadSentences(const std::filesystem::path &path) {
  std::vector<std::string> out;
  for (const auto &[offset, raw] : Lines(ReadFile(path))) {
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

BatchReport BatchAnalyze(const std::vector<std::string> &sentences,
                         const Lexicon &lex, ResolutionMemory &mem,
                         const BatchOptions &options) {
  auto started = std::chrono::steady_clock::now();
  BatchReport report;
  std::map<std::string, std::size_t> gold_index;
  if (options.gold) {
    for (std::size_t i = 0; i < options.gold->size(); ++i) {
      gold_index.emplace(FoldPhrase((*options.gold)[i].raw), i);
    }
  }

  for (const std::string &sentence : sentences) {
    BatchRow row;
    row.raw = Normalize(sentence).canonical;
    try {
      TokenList tokens = Tokenize(row.raw);
      if (ClassifySentence(tokens) == SentenceKind::kInterrogative) {
        throw Error("questions are not analyzed in batch mode");
      }
      AnalysisOutcome out = Analyze(tokens, lex, mem);
      while (!out.complete()) {
        ++row.clarifications;
        const Clarification &c = *out.pending;
        std::optional<Role> choice;
        if (options.choices) {
          auto it = options.choices->find(FoldPhrase(c.words));
          if (it != options.choices->end()) choice = it->second;
        }
        if (choice && std::find(c.options.begin(), c.options.end(), *choice) !=
                          c.options.end()) {
          auto [next, learned] = ResolveClarification(out, c.id, *choice, mem, lex);
          mem = std::move(learned);
          out = std::move(next);
        } else {
          ++row.deferred;
          out = DeferClarification(out, mem, lex);
        }
      }
      row.record = *out.record;
      if (options.story) row.record->seq = options.story->Append(*row.record);
    } catch (const Error &e) {
      row.error = e.what();
    }
    if (auto it = gold_index.find(FoldPhrase(row.raw)); it != gold_index.end()) {
      row.gold = it->second;
    }
    report.rows.push_back(std::move(row));
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const BatchRow &row = report.rows[i];
    if (!row.gold) continue;
    const GoldRow &g = (*options.gold)[*row.gold];
    ++report.scored_rows;
    for (Role r : kAllRoles) {
      if (g.exclude.count(r)) continue;
      std::string got = row.record && row.record->has(r) ? row.record->get(r)->text : "";
      std::string want = g.record.has(r) ? g.record.get(r)->text : "";
      bool equal = FoldPhrase(got) == FoldPhrase(want);
      FieldStats &fs = report.fields[Index(r)];
      if (!want.empty()) ++fs.gold;
      if (!got.empty()) ++fs.predicted;
      if (equal && !want.empty()) ++fs.correct;
      ++report.all_cells;
      if (equal) ++report.all_correct;
      if (!got.empty() || !want.empty()) {
        ++report.filled_cells;
        if (equal) ++report.filled_correct;
      }
      if (!equal) report.mismatches.push_back({i, r, got, want});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string BatchReport::Format() const {
  int recorded = 0, asked = 0, deferred = 0;
  for (const BatchRow &r : rows) {
    if (r.record) ++recorded;
    asked += r.clarifications;
    deferred += r.deferred;
  }
  std::ostringstream out;
  out << "sentences: " << rows.size() << "  recorded: " << recorded
      << "  scored: " << scored_rows << "  clarifications: " << asked
      << "  unresolved: " << deferred << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error.empty()) {
      out << "error " << i + 1 << ": " << rows[i].error << "\n";
    }
  }
  if (scored_rows > 0) {
    char buf[128];
    out << "\nfield          gold  pred  correct  precision  recall\n";
    for (Role r : kAllRoles) {
      const FieldStats &f = fields[Index(r)];
      double p = f.predicted ? static_cast<double>(f.correct) / f.predicted : 0.0;
      double rc = f.gold ? static_cast<double>(f.correct) / f.gold : 0.0;
      std::snprintf(buf, sizeof buf, "%-13s %5d %5d %8d %10.3f %7.3f\n",
                    std::string(FieldName(r)).c_str(), f.gold, f.predicted,
                    f.correct, p, rc);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "\nall-cell accuracy: %.4f (%d/%d)\n",
                  all_accuracy(), all_correct, all_cells);
    out << buf;
    std::snprintf(buf, sizeof buf, "filled-cell accuracy: %.4f (%d/%d)\n",
                  filled_accuracy(), filled_correct, filled_cells);
    out << buf;
    if (!mismatches.empty()) {
      out << "\nmismatches:\n";
      for (const Mismatch &m : mismatches) {
        out << "  " << m.row + 1 << " " << FieldName(m.role) << ": got \""
            << m.got << "\", gold \"" << m.want << "\"\n";
      }
    }
  }
  return out.str();
}

}  // namespace diasexp
