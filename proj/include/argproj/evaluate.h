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

// Scoring of component tagging and relation classification. Any metric
// with an empty denominator is 0.

#ifndef ARGPROJ_EVALUATE_H_
#define ARGPROJ_EVALUATE_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argproj/corpus.h"
#include "argproj/relations.h"

namespace argproj {

struct ClassScores {
  std::size_t true_positives = 0;
  std::size_t predicted = 0;
  // Gold count (tokens or spans, depending on mode).
  std::size_t support = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static ClassScores FromCounts(std::size_t true_positives,
                                std::size_t predicted, std::size_t support);
};

enum class EvalMode {
  kToken,  // every token scored by its class; B-X and I-X both count as X
  kSpan,   // exact (start, end, label) matches
};

std::string_view ToString(EvalMode mode);

struct EvalReport {
  EvalMode mode = EvalMode::kToken;
  ClassScores claim;
  ClassScores premise;
  // Only when MajorClaim occurs in gold or predictions; never part of the
  // headline.
  std::optional<ClassScores> major_claim;
  // (F1-Claim + F1-Premise) / 2.
  double headline_f1 = 0.0;
};

// Throws MismatchError unless both corpora have the same sentences count
// and token count per sentence.
EvalReport ScoreComponents(const Corpus& gold, const Corpus& predicted,
                           EvalMode mode = EvalMode::kToken);

struct RelationScores {
  // Per-class scores over the labels seen in gold or predictions.
  std::map<RelationLabel, ClassScores> per_class;
  double macro_f1 = 0.0;
};

RelationScores ScoreRelations(std::span<const RelationInstance> gold,
                              std::span<const RelationLabel> predicted);

// Reads one label per line (with or without the __label__ prefix).
std::vector<RelationLabel> ParseRelationLabels(std::string_view text);

// Comparison of several named reports.
struct VariantComparison {
  static constexpr std::size_t kColumns = 7;
  // P-C, R-C, F1-C, P-P, R-P, F1-P, F1.
  static constexpr std::array<std::string_view, kColumns> kColumnNames = {
      "P-C", "R-C", "F1-C", "P-P", "R-P", "F1-P", "F1"};

  struct Row {
    std::string name;
    std::array<double, kColumns> values{};
    std::array<bool, kColumns> best{};
  };
  std::vector<Row> rows;

  // Fixed-width text table; the best value per column is starred.
  std::string ToText() const;
};

VariantComparison CompareVariants(
    const std::vector<std::pair<std::string, EvalReport>>& reports);

}  // namespace argproj

#endif  // ARGPROJ_EVALUATE_H_
