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

#include "diasexp/textnorm.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "diasexp/error.h"
#include "diasexp/qa.h"

namespace diasexp {

namespace {

const icu::Locale &Romanian() {
  static const icu::Locale locale("ro");
  return locale;
}

icu::UnicodeString ToUnicode(std::string_view s) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
}

std::string ToUtf8(const icu::UnicodeString &u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

icu::UnicodeString Nfc(const icu::UnicodeString &u) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return u;
  icu::UnicodeString out = nfc->normalize(u, status);
  return U_FAILURE(status) ? u : out;
}

// Cedilla variants of s/t are a legacy encoding of the comma-below letters.
UChar32 CommaBelow(UChar32 c) {
  switch (c) {
    case 0x015F: return 0x0219;  // ş -> ș
    case 0x0163: return 0x021B;  // ţ -> ț
    case 0x015E: return 0x0218;  // Ş -> Ș
    case 0x0162: return 0x021A;  // Ţ -> Ț
    default: return c;
  }
}

bool IsPunct(char c) {
  return c == ',' || c == '.' || c == '?' || c == '!' || c == ';' || c == ':';
}

TokenKind PunctKind(char c) {
  switch (c) {
    case ',': return TokenKind::kComma;
    case '.': return TokenKind::kPeriod;
    case '?': return TokenKind::kQuestionMark;
    default: return TokenKind::kOther;
  }
}

}  // namespace

NormText Normalize(std::string_view raw) {
  icu::UnicodeString u = Nfc(ToUnicode(raw));
  icu::UnicodeString cleaned;
  bool pending_space = false;
  for (int32_t i = 0; i < u.length();) {
    UChar32 c = u.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && cleaned.length() > 0) cleaned.append(UChar(' '));
    pending_space = false;
    cleaned.append(CommaBelow(c));
  }
  NormText text;
  text.original = std::string(raw);
  text.canonical = ToUtf8(cleaned);
  text.lowered = Lower(text.canonical);
  return text;
}

std::string Lower(std::string_view s) {
  icu::UnicodeString u = ToUnicode(s);
  u.toLower(Romanian());
  return ToUtf8(u);
}

std::string Fold(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfd = icu::Normalizer2::getNFDInstance(status);
  icu::UnicodeString u = ToUnicode(s);
  if (U_SUCCESS(status)) u = nfd->normalize(u, status);
  icu::UnicodeString stripped;
  for (int32_t i = 0; i < u.length();) {
    UChar32 c = u.char32At(i);
    i += U16_LENGTH(c);
    if (u_charType(c) == U_NON_SPACING_MARK) continue;
    stripped.append(c);
  }
  stripped.toLower(Romanian());
  return ToUtf8(stripped);
}

std::string FoldPhrase(std::string_view phrase) {
  std::string out;
  for (const Token &t : Tokenize(phrase)) {
    if (!out.empty()) out += ' ';
    out += t.folded;
  }
  return out;
}

bool IsCapitalized(std::string_view word) {
  if (word.empty()) return false;
  icu::UnicodeString u = ToUnicode(word);
  return u_isupper(u.char32At(0));
}

std::string Capitalize(std::string_view s) {
  if (s.empty()) return {};
  icu::UnicodeString u = ToUnicode(s);
  UChar32 first = u.char32At(0);
  icu::UnicodeString out;
  out.append(u_toupper(first));
  out.append(u, U16_LENGTH(first), u.length() - U16_LENGTH(first));
  return ToUtf8(out);
}

TokenList Tokenize(const NormText &text) {
  const std::string &s = text.canonical;
  TokenList tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t end = s.find(' ', i);
    if (end == std::string::npos) end = s.size();
    // Leading punctuation (rare: ", deoarece" typed without a space).
    while (i < end && IsPunct(s[i])) {
      tokens.push_back({std::string(1, s[i]), std::string(1, s[i]),
                        PunctKind(s[i]), {i, i + 1}});
      ++i;
    }
    std::size_t word_end = end;
    while (word_end > i && IsPunct(s[word_end - 1])) --word_end;
    if (word_end > i) {
      std::string surface = s.substr(i, word_end - i);
      tokens.push_back({surface, Fold(surface), TokenKind::kWord,
                        {i, word_end}});
    }
    for (std::size_t p = word_end; p < end; ++p) {
      tokens.push_back({std::string(1, s[p]), std::string(1, s[p]),
                        PunctKind(s[p]), {p, p + 1}});
    }
    i = end;
  }
  return tokens;
}

TokenList Tokenize(std::string_view raw) { return Tokenize(Normalize(raw)); }

SentenceKind ClassifySentence(std::span<const Token> tokens) {
  if (tokens.empty()) throw EmptyInput();
  if (tokens.back().kind == TokenKind::kQuestionMark) {
    return SentenceKind::kInterrogative;
  }
  if (MatchWhWord(tokens).has_value()) return SentenceKind::kInterrogative;
  return SentenceKind::kAssertive;
}

std::string JoinSurface(std::span<const Token> tokens) {
  std::string out;
  for (const Token &t : tokens) {
    if (!out.empty() && t.is_word()) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace diasexp
