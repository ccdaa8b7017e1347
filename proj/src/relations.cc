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

#include "argproj/relations.h"

#include "argproj/error.h"
#include "argproj/text.h"

namespace argproj {
namespace {

constexpr std::string_view kLabelPrefix = "__label__";

// Strips the single outermost bracket pair of one field.
std::string Unbracket(std::string_view field, std::size_t line_no,
                      std::size_t column) {
  if (field.size() < 2 || field.front() != '[' || field.back() != ']') {
    throw ParseError("field is not enclosed in [ ]", line_no, column);
  }
  if (field.size() == 2) throw ParseError("empty text", line_no, column);
  return std::string(field.substr(1, field.size() - 2));
}

}  // namespace

std::string_view ToString(RelationLabel label) {
  switch (label) {
    case RelationLabel::kSupport:
      return "Support";
    case RelationLabel::kAttack:
      return "Attack";
    case RelationLabel::kPartialAttack:
      return "Partial-Attack";
    case RelationLabel::kNoRel:
      return "noRel";
  }
  return "?";
}

std::optional<RelationLabel> ParseRelationLabel(std::string_view text) {
  for (RelationLabel label : kRelationLabels) {
    if (ToString(label) == text) return label;
  }
  return std::nullopt;
}

void RelationInstance::Validate() const {
  for (const std::string* text : {&source_text, &target_text}) {
    if (text->empty()) throw ValidationError("relation text is empty");
    if (text->find_first_of("\t\n\r") != std::string::npos) {
      throw ValidationError("relation text contains a tab or newline");
    }
  }
}

std::vector<RelationInstance> ParseRelations(std::string_view text) {
  std::vector<RelationInstance> out;
  const auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (auto bad = FindInvalidUtf8(line)) {
      throw ParseError("invalid UTF-8", line_no, *bad + 1);
    }
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == line.npos ? line.npos : line.find('\t', tab1 + 1);
    if (tab2 == line.npos || line.find('\t', tab2 + 1) != line.npos) {
      throw ParseError("expected 3 tab-separated fields", line_no);
    }
    const std::string_view head = line.substr(0, tab1);
    if (!head.starts_with(kLabelPrefix)) {
      throw ParseError("missing __label__ prefix", line_no, 1);
    }
    const auto label = ParseRelationLabel(head.substr(kLabelPrefix.size()));
    if (!label) {
      throw ParseError("unknown relation label '" +
                           std::string(head.substr(kLabelPrefix.size())) + "'",
                       line_no, kLabelPrefix.size() + 1);
    }
    RelationInstance instance;
    instance.label = *label;
    instance.source_text =
        Unbracket(line.substr(tab1 + 1, tab2 - tab1 - 1), line_no, tab1 + 2);
    instance.target_text =
        Unbracket(line.substr(tab2 + 1), line_no, tab2 + 2);
    out.push_back(std::move(instance));
  }
  return out;
}

std::string SerializeRelations(std::span<const RelationInstance> instances) {
  std::string out;
  for (const RelationInstance& instance : instances) {
    instance.Validate();
    out += kLabelPrefix;
    out += ToString(instance.label);
    out += "\t[";
    out += instance.source_text;
    out += "]\t[";
    out += instance.target_text;
    out += "]\n";
  }
  return out;
}

RelationStats ComputeRelationStats(
    std::span<const RelationInstance> instances) {
  RelationStats stats;
  for (const RelationInstance& instance : instances) ++stats[instance.label];
  return stats;
}

}  // namespace argproj
