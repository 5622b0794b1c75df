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

#ifndef DIASEXP_RECORD_H_
#define DIASEXP_RECORD_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "diasexp/roles.h"

namespace diasexp {

// Inclusive token index range.
struct TokenRange {
  std::size_t first = 0;
  std::size_t last = 0;
  bool operator==(const TokenRange &) const = default;
  auto operator<=>(const TokenRange &) const = default;
};

struct Field {
  std::string text;    // surface form, words joined by single spaces
  std::string folded;  // matching key
  std::string trigger; // provenance label, empty for hand-entered data
  std::optional<TokenRange> range;
  bool operator==(const Field &) const = default;
};

// One analyzed assertive sentence: the twelve sentence-part columns plus
// the original text.
struct SentenceRecord {
  std::array<std::optional<Field>, kNumRoles> fields;
  bool predicative = false;  // predicate is a form of "a fi"
  std::string raw;
  std::int64_t seq = 0;

  bool has(Role r) const { return fields[Index(r)].has_value(); }
  const std::optional<Field> &get(Role r) const { return fields[Index(r)]; }
  // Surface text or "" when the part is absent.
  std::string_view text(Role r) const {
    return has(r) ? std::string_view(fields[Index(r)]->text) : std::string_view();
  }
  void set(Role r, std::string text, std::string trigger = {},
           std::optional<TokenRange> range = std::nullopt);
  void clear(Role r) { fields[Index(r)].reset(); }

  bool operator==(const SentenceRecord &) const = default;
};

}  // namespace diasexp

#endif  // DIASEXP_RECORD_H_
