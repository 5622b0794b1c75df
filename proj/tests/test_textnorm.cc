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
#include "diasexp/textnorm.h"
#include "doctest.h"

namespace diasexp {
namespace {

std::vector<std::string> Surfaces(const TokenList &t) {
  std::vector<std::string> out;
  for (const Token &tok : t) out.push_back(tok.surface);
  return out;
}

TEST_CASE("normalize collapses whitespace and maps cedilla letters") {
  CHECK(Normalize("Elena  este  frumoasă.").canonical == "Elena este frumoasă.");
  CHECK(Normalize("  Elena\teste ").canonical == "Elena este");
  CHECK(Normalize("ţară").canonical == "țară");
  CHECK(Normalize("Ş Ţ ş ţ").canonical == "Ș Ț ș ț");
  CHECK(Normalize("").canonical.empty());
}

TEST_CASE("normalize composes decomposed diacritics") {
  // "a" + combining breve.
  CHECK(Normalize("fat\x61\xcc\x86").canonical == "fată");
}

TEST_CASE("normalize is idempotent") {
  for (const char *s : {"Elena  este  frumoasă.", "ţară", " Copiii,cei cuminți ", "", "ÎNTRUCÂT"}) {
    std::string once = Normalize(s).canonical;
    CHECK(Normalize(once).canonical == once);
  }
}

TEST_CASE("fold strips diacritics and case") {
  CHECK(Fold("Părinților") == "parintilor");
  CHECK(Fold("ÎNTRUCÂT") == "intrucat");
  CHECK(Fold("șoarece") == "soarece");
  CHECK(Fold("ţară") == "tara");
  CHECK(Lower("Ăsta") == "ăsta");
  CHECK(FoldPhrase("  În  fața ") == "in fata");
}

TEST_CASE("capitalization helpers") {
  CHECK(IsCapitalized("Elena"));
  CHECK(IsCapitalized("Ștefan"));
  CHECK_FALSE(IsCapitalized("elena"));
  CHECK_FALSE(IsCapitalized(","));
  CHECK(Capitalize("ăsta e") == "Ăsta e");
}

TEST_CASE("tokenize splits punctuation and keeps clitic hyphens") {
  CHECK(Surfaces(Tokenize("Elena este frumoasă, deoarece are ochi frumoși.")) ==
        std::vector<std::string>{"Elena", "este", "frumoasă", ",", "deoarece", "are",
                                 "ochi", "frumoși", "."});
  CHECK(Surfaces(Tokenize("Cum este Elena?")) ==
        std::vector<std::string>{"Cum", "este", "Elena", "?"});
  CHECK(Surfaces(Tokenize("Elena s-ar căsători cu Adrian")) ==
        std::vector<std::string>{"Elena", "s-ar", "căsători", "cu", "Adrian"});
  CHECK(Tokenize("").empty());
}

TEST_CASE("token kinds and spans") {
  NormText n = Normalize("Părinții Elenei, azi.");
  TokenList t = Tokenize(n);
  REQUIRE(t.size() == 5);
  CHECK(t[2].kind == TokenKind::kComma);
  CHECK(t[4].kind == TokenKind::kPeriod);
  CHECK(t[0].folded == "parintii");
  for (const Token &tok : t) {
    CHECK(n.canonical.substr(tok.span.start, tok.span.end - tok.span.start) == tok.surface);
  }
}

TEST_CASE("classify sentence") {
  CHECK(ClassifySentence(Tokenize("Cine citește cartea ?")) == SentenceKind::kInterrogative);
  CHECK(ClassifySentence(Tokenize("Pe cine iubește Adrian.")) == SentenceKind::kInterrogative);
  CHECK(ClassifySentence(Tokenize("Elena este sociabilă mereu.")) == SentenceKind::kAssertive);
  CHECK(ClassifySentence(Tokenize("abc")) == SentenceKind::kAssertive);
  CHECK(ClassifySentence(Tokenize("Elena vine?")) == SentenceKind::kInterrogative);
  CHECK_THROWS_AS(ClassifySentence(TokenList{}), EmptyInput);
}

TEST_CASE("join surface") {
  CHECK(JoinSurface(Tokenize("Elena  este frumoasă , deoarece .")) ==
        "Elena este frumoasă, deoarece.");
}

}  // namespace
}  // namespace diasexp
