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

// Text normalization and tokenization for Romanian input sentences.
//
// All matching in the system happens on "folded" keys: lowercase with the
// Romanian diacritics removed, so that "frumoasă" typed without diacritics
// still matches.

#ifndef DIASEXP_TEXTNORM_H_
#define DIASEXP_TEXTNORM_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diasexp {

struct NormText {
  std::string original;
  // NFC, comma-below ș/ț, single interior spaces, trimmed.
  std::string canonical;
  // Lowercased copy of canonical, byte-for-byte aligned only for ASCII.
  std::string lowered;
};

// Total function; idempotent.
NormText Normalize(std::string_view raw);

// Lowercase of a (normalized) string.
std::string Lower(std::string_view s);

// Matching key: lowercase, diacritics stripped.
std::string Fold(std::string_view s);

// Folds every word of a phrase and joins them with single spaces.
std::string FoldPhrase(std::string_view phrase);

// True if the first code point is an uppercase letter.
bool IsCapitalized(std::string_view word);

// Uppercases the first code point.
std::string Capitalize(std::string_view s);

enum class TokenKind { kWord, kComma, kPeriod, kQuestionMark, kOther };

struct Span {
  std::size_t start = 0;  // byte offsets into NormText::canonical
  std::size_t end = 0;
  bool operator==(const Span &) const = default;
};

struct Token {
  std::string surface;
  std::string folded;
  TokenKind kind = TokenKind::kWord;
  Span span;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool is_punct() const { return kind != TokenKind::kWord; }
  bool capitalized() const { return is_word() && IsCapitalized(surface); }
  bool operator==(const Token &) const = default;
};

using TokenList = std::vector<Token>;

// Splits on whitespace and peels trailing punctuation (, . ? ! ; :) into
// separate tokens. Hyphenated clitic forms ("s-ar") stay one token.
TokenList Tokenize(const NormText &text);
TokenList Tokenize(std::string_view raw);

enum class SentenceKind { kAssertive, kInterrogative };

// Interrogative iff the final token is "?" or the sentence opens with an
// interrogative word. Throws EmptyInput on an empty list.
SentenceKind ClassifySentence(std::span<const Token> tokens);

// Joins token surfaces with single spaces, without a space before
// punctuation.
std::string JoinSurface(std::span<const Token> tokens);

}  // namespace diasexp

#endif  // DIASEXP_TEXTNORM_H_
