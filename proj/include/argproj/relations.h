// Copyright 2026 The argproj Authors.
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

// Relation-instance files, one labeled component pair per line:
//
//   __label__Support<TAB>[source text]<TAB>[target text]

#ifndef ARGPROJ_RELATIONS_H_
#define ARGPROJ_RELATIONS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argproj {

enum class RelationLabel { kSupport, kAttack, kPartialAttack, kNoRel };

inline constexpr std::array<RelationLabel, 4> kRelationLabels = {
    RelationLabel::kSupport, RelationLabel::kAttack,
    RelationLabel::kPartialAttack, RelationLabel::kNoRel};

// "Support", "Attack", "Partial-Attack", "noRel".
std::string_view ToString(RelationLabel label);
std::optional<RelationLabel> ParseRelationLabel(std::string_view text);

struct RelationInstance {
  RelationLabel label = RelationLabel::kNoRel;
  std::string source_text;
  std::string target_text;

  // Throws ValidationError on empty texts or embedded tabs/newlines.
  void Validate() const;

  bool operator==(const RelationInstance&) const = default;
};

// Throws ParseError (1-based line and column).
std::vector<RelationInstance> ParseRelations(std::string_view text);
std::string SerializeRelations(std::span<const RelationInstance> instances);

struct RelationStats {
  std::array<std::size_t, 4> counts{};

  std::size_t& operator[](RelationLabel label) {
    return counts[static_cast<std::size_t>(label)];
  }
  std::size_t operator[](RelationLabel label) const {
    return counts[static_cast<std::size_t>(label)];
  }
  std::size_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
  bool operator==(const RelationStats&) const = default;
};

RelationStats ComputeRelationStats(std::span<const RelationInstance> instances);

}  // namespace argproj

#endif  // ARGPROJ_RELATIONS_H_
