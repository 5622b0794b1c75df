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

#ifndef DIASEXP_ROLES_H_
#define DIASEXP_ROLES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace diasexp {

// Sentence parts, in record column order.
enum class Role {
  kSubject,
  kAttribSub,
  kPredicate,
  kDirObj,
  kAttributeDo,
  kIndirObj,
  kAttributeIo,
  kWhen,
  kWhere,
  kHow,
  kGoal,
  kWhy,
};

inline constexpr std::size_t kNumRoles = 12;

inline constexpr std::array<Role, kNumRoles> kAllRoles = {
    Role::kSubject,     Role::kAttribSub, Role::kPredicate,
    Role::kDirObj,      Role::kAttributeDo, Role::kIndirObj,
    Role::kAttributeIo, Role::kWhen,      Role::kWhere,
    Role::kHow,         Role::kGoal,      Role::kWhy,
};

constexpr std::size_t Index(Role r) { return static_cast<std::size_t>(r); }

// Lowercase field name used in story files and the HTTP API
// ("subject", "attrib_sub", ...).
std::string_view FieldName(Role r);

// Display name ("Subject", "Attrib_sub", ...).
std::string_view RoleName(Role r);

// Short English gloss shown in clarification prompts.
std::string_view RoleLabel(Role r);

// Accepts either the field name or the display name, case-insensitively.
std::optional<Role> ParseRole(std::string_view name);

// The attribute slot belonging to a head role, if any.
std::optional<Role> AttributeOf(Role head);

// The head role an attribute slot belongs to, if r is an attribute.
std::optional<Role> HeadOf(Role attribute);

}  // namespace diasexp

#endif  // DIASEXP_ROLES_H_
