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

#include "argproj/evaluate.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "argproj/error.h"
#include "argproj/text.h"

namespace argproj {
namespace {

double Ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) /
                                static_cast<double>(denominator);
}

struct Tally {
  std::array<std::size_t, 3> true_positives{};
  std::array<std::size_t, 3> predicted{};
  std::array<std::size_t, 3> gold{};
};

void TallyTokens(const AnnotatedSentence& gold, const AnnotatedSentence& pred,
                 Tally* tally) {
  std::vector<int> gold_class(gold.size(), -1);
  for (const Span& span : gold.spans()) {
    for (std::size_t i = span.start; i < span.end; ++i) {
      gold_class[i] = static_cast<int>(span.label);
    }
  }
  for (const Span& span : gold.spans()) {
    tally->gold[static_cast<std::size_t>(span.label)] += span.size();
  }
  for (const Span& span : pred.spans()) {
    const auto label = static_cast<std::size_t>(span.label);
    tally->predicted[label] += span.size();
    for (std::size_t i = span.start; i < span.end; ++i) {
      if (gold_class[i] == static_cast<int>(label)) {
        ++tally->true_positives[label];
      }
    }
  }
}

void TallySpans(const AnnotatedSentence& gold, const AnnotatedSentence& pred,
                Tally* tally) {
  for (const Span& span : gold.spans()) {
    ++tally->gold[static_cast<std::size_t>(span.label)];
  }
  const auto& gold_spans = gold.spans();
  for (const Span& span : pred.spans()) {
    ++tally->predicted[static_cast<std::size_t>(span.label)];
    const auto it = std::lower_bound(
        gold_spans.begin(), gold_spans.end(), span.start,
        [](const Span& a, std::size_t start) { return a.start < start; });
    if (it != gold_spans.end() && *it == span) {
      ++tally->true_positives[static_cast<std::size_t>(span.label)];
    }
  }
}

}  // namespace

ClassScores ClassScores::FromCounts(std::size_t true_positives,
                                    std::size_t predicted,
                                    std::size_t support) {
  ClassScores scores;
  scores.true_positives = true_positives;
  scores.predicted = predicted;
  scores.support = support;
  scores.precision = Ratio(true_positives, predicted);
  scores.recall = Ratio(true_positives, support);
  // Harmonic mean of precision and recall, in count form.
  scores.f1 = Ratio(2 * true_positives, predicted + support);
  return scores;
}

std::string_view ToString(EvalMode mode) {
  return mode == EvalMode::kToken ? "token" : "span";
}

EvalReport ScoreComponents(const Corpus& gold, const Corpus& predicted,
                           EvalMode mode) {
  const auto gold_sentences = gold.Sentences();
  const auto pred_sentences = predicted.Sentences();
  if (gold_sentences.size() != pred_sentences.size()) {
    throw MismatchError("gold has " + std::to_string(gold_sentences.size()) +
                        " sentences, predictions have " +
                        std::to_string(pred_sentences.size()));
  }
  Tally tally;
  for (std::size_t i = 0; i < gold_sentences.size(); ++i) {
    const AnnotatedSentence& g = *gold_sentences[i];
    const AnnotatedSentence& p = *pred_sentences[i];
    if (g.size() != p.size()) {
      throw MismatchError("sentence " + std::to_string(i + 1) + " has " +
                          std::to_string(g.size()) + " gold tokens but " +
                          std::to_string(p.size()) + " predicted tokens");
    }
    if (mode == EvalMode::kToken) {
      TallyTokens(g, p, &tally);
    } else {
      TallySpans(g, p, &tally);
    }
  }
  auto scores = [&](ComponentLabel label) {
    const auto k = static_cast<std::size_t>(label);
    return ClassScores::FromCounts(tally.true_positives[k], tally.predicted[k],
                                   tally.gold[k]);
  };
  EvalReport report;
  report.mode = mode;
  report.claim = scores(ComponentLabel::kClaim);
  report.premise = scores(ComponentLabel::kPremise);
  const auto mc = static_cast<std::size_t>(ComponentLabel::kMajorClaim);
  if (tally.gold[mc] > 0 || tally.predicted[mc] > 0) {
    report.major_claim = scores(ComponentLabel::kMajorClaim);
  }
  report.headline_f1 = (report.claim.f1 + report.premise.f1) / 2.0;
  return report;
}

RelationScores ScoreRelations(std::span<const RelationInstance> gold,
                              std::span<const RelationLabel> predicted) {
  if (gold.size() != predicted.size()) {
    throw MismatchError("gold has " + std::to_string(gold.size()) +
                        " relations, predictions have " +
                        std::to_string(predicted.size()));
  }
  std::map<RelationLabel, std::array<std::size_t, 3>> counts;  // tp, pred, gold
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto& g = counts[gold[i].label];
    auto& p = counts[predicted[i]];
    ++g[2];
    ++p[1];
    if (gold[i].label == predicted[i]) ++g[0];
  }
  RelationScores scores;
  double sum = 0.0;
  for (const auto& [label, c] : counts) {
    const ClassScores s = ClassScores::FromCounts(c[0], c[1], c[2]);
    sum += s.f1;
    scores.per_class.emplace(label, s);
  }
  scores.macro_f1 =
      counts.empty() ? 0.0 : sum / static_cast<double>(counts.size());
  return scores;
}

std::vector<RelationLabel> ParseRelationLabels(std::string_view text) {
  std::vector<RelationLabel> labels;
  const auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto pieces = SplitTokens(lines[i]);
    if (pieces.empty()) continue;
    std::string_view word = pieces.front();
    if (word.starts_with("__label__")) word.remove_prefix(9);
    const auto label = ParseRelationLabel(word);
    if (!label) {
      throw ParseError("unknown relation label '" + std::string(word) + "'",
                       i + 1, 1);
    }
    labels.push_back(*label);
  }
  return labels;
}

VariantComparison CompareVariants(
    const std::vector<std::pair<std::string, EvalReport>>& reports) {
  VariantComparison table;
  for (const auto& [name, report] : reports) {
    VariantComparison::Row row;
    row.name = name;
    row.values = {report.claim.precision,   report.claim.recall,
                  report.claim.f1,          report.premise.precision,
                  report.premise.recall,    report.premise.f1,
                  report.headline_f1};
    table.rows.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < VariantComparison::kColumns; ++c) {
    double best = -1.0;
    for (const auto& row : table.rows) best = std::max(best, row.values[c]);
    for (auto& row : table.rows) row.best[c] = row.values[c] == best;
  }
  return table;
}

std::string VariantComparison::ToText() const {
  std::size_t name_width = 7;
  for (const Row& row : rows) name_width = std::max(name_width, row.name.size());
  std::string out = "variant";
  out.append(name_width - 7, ' ');
  char cell[32];
  for (std::string_view column : kColumnNames) {
    std::snprintf(cell, sizeof(cell), " %8.*s", static_cast<int>(column.size()),
                  column.data());
    out += cell;
  }
  out += '\n';
  for (const Row& row : rows) {
    out += row.name;
    out.append(name_width - row.name.size(), ' ');
    for (std::size_t c = 0; c < kColumns; ++c) {
      std::snprintf(cell, sizeof(cell), " %7.2f%c", row.values[c] * 100.0,
                    row.best[c] ? '*' : ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace argproj
