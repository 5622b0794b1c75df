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

#include "diasexp/roles.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace diasexp {

namespace {

struct RoleInfo {
  std::string_view field;
  std::string_view name;
  std::string_view label;
};

constexpr std::array<RoleInfo, kNumRoles> kRoleInfo = {{
    {"subject", "Subject", "subject"},
    {"attrib_sub", "Attrib_sub", "attribute of the subject"},
    {"predicate", "Predicate", "predicate"},
    {"dir_obj", "Dir_obj", "direct object"},
    {"attribute_do", "Attribute_do", "attribute of the direct object"},
    {"indir_obj", "Indir_obj", "indirect object"},
    {"attribute_io", "Attribute_io", "attribute of the indirect object"},
    {"when", "When", "time adverbial"},
    {"where", "Where", "place adverbial"},
    {"how", "How", "manner adverbial"},
    {"goal", "Goal", "goal adverbial"},
    {"why", "Why", "cause adverbial"},
}};

}  // namespace

std::string_view FieldName(Role r) { return kRoleInfo[Index(r)].field; }
std::string_view RoleName(Role r) { return kRoleInfo[Index(r)].name; }
std::string_view RoleLabel(Role r) { return kRoleInfo[Index(r)].label; }

std::optional<Role> ParseRole(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Role r : kAllRoles) {
    if (lowered == FieldName(r)) return r;
  }
  return std::nullopt;
}

std::optional<Role> AttributeOf(Role head) {
  switch (head) {
    case Role::kSubject: return Role::kAttribSub;
    case Role::kDirObj: return Role::kAttributeDo;
    case Role::kIndirObj: return Role::kAttributeIo;
    default: return std::nullopt;
  }
}

std::optional<Role> HeadOf(Role attribute) {
  switch (attribute) {
    case Role::kAttribSub: return Role::kSubject;
    case Role::kAttributeDo: return Role::kDirObj;
    case Role::kAttributeIo: return Role::kIndirObj;
    default: return std::nullopt;
  }
}

}  // namespace diasexp
