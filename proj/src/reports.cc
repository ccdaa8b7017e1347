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

#include "argproj/reports.h"

#include "argproj/error.h"

namespace argproj {

Json ToJson(const ComponentStats& stats) {
  Json out;
  out["Premise"] = stats[ComponentLabel::kPremise];
  out["Claim"] = stats[ComponentLabel::kClaim];
  out["MajorClaim"] = stats[ComponentLabel::kMajorClaim];
  out["total"] = stats.total();
  return out;
}

Json ToJson(const RelationStats& stats) {
  Json out;
  for (RelationLabel label : kRelationLabels) {
    out[std::string(ToString(label))] = stats[label];
  }
  out["total"] = stats.total();
  return out;
}

Json ToJson(const ProjectionConfig& config) {
  return {{"gap_tolerance", config.gap_tolerance},
          {"include_punctuation", config.include_punctuation},
          {"on_unprojectable",
           config.on_unprojectable == UnprojectablePolicy::kDrop ? "drop"
                                                                 : "error"}};
}

Json ToJson(const ProjectionReport& report) {
  Json out;
  out["config"] = ToJson(report.config);
  out["overall"] = report.overall;
  out["full_O"] = report.source.full_o;
  out["full_component"] = report.source.full_component;
  out["partial"] = report.source.partial;
  out["dropped_spans"] = report.dropped_spans;
  out["projected_spans"] = report.projected_spans;
  out["target_classes"] = {{"full_O", report.target.full_o},
                           {"full_component", report.target.full_component},
                           {"partial", report.target.partial}};
  out["notes"] =
      "full_component counts source sentences whose single span covers "
      "every non-punctuation token; punctuation outside the span is ignored";
  return out;
}

Json ToJson(const CorrectionReport& report) {
  Json rules = Json::object();
  for (CorrectionRule rule : kCorrectionRules) {
    rules[std::string(ToString(rule))] = {
        {"applications", report[rule].applications},
        {"spans_modified", report[rule].spans_modified}};
  }
  return {{"sentences", report.sentences},
          {"sentences_touched", report.sentences_touched},
          {"total_applications", report.total_applications()},
          {"rules", rules}};
}

Json ToJson(const ClassScores& scores) {
  return {{"precision", scores.precision}, {"recall", scores.recall},
          {"f1", scores.f1},               {"support", scores.support},
          {"predicted", scores.predicted}, {"true_positives", scores.true_positives}};
}

Json ToJson(const EvalReport& report) {
  Json out;
  out["mode"] = std::string(ToString(report.mode));
  out["Claim"] = ToJson(report.claim);
  out["Premise"] = ToJson(report.premise);
  if (report.major_claim) out["MajorClaim"] = ToJson(*report.major_claim);
  out["F1-C"] = report.claim.f1;
  out["F1-P"] = report.premise.f1;
  out["F1"] = report.headline_f1;
  return out;
}

Json ToJson(const RelationScores& scores) {
  Json per_class = Json::object();
  for (const auto& [label, s] : scores.per_class) {
    per_class[std::string(ToString(label))] = ToJson(s);
  }
  return {{"per_class", per_class}, {"macro_f1", scores.macro_f1}};
}

Json ToJson(const VariantComparison& comparison) {
  Json rows = Json::array();
  for (const auto& row : comparison.rows) {
    Json values;
    Json best = Json::array();
    for (std::size_t c = 0; c < VariantComparison::kColumns; ++c) {
      const std::string column(VariantComparison::kColumnNames[c]);
      values[column] = row.values[c];
      if (row.best[c]) best.push_back(column);
    }
    rows.push_back({{"name", row.name}, {"values", values}, {"best", best}});
  }
  return {{"rows", rows}};
}

Json ToJson(const Distribution& distribution) {
  Json components = Json::object();
  for (const auto& [name, stats] : distribution.components) {
    components[name] = ToJson(stats);
  }
  if (!distribution.components.empty()) {
    components["Total"] = ToJson(distribution.ComponentTotal());
  }
  Json relations = Json::object();
  for (const auto& [name, stats] : distribution.relations) {
    relations[name] = ToJson(stats);
  }
  if (!distribution.relations.empty()) {
    relations["Total"] = ToJson(distribution.RelationTotal());
  }
  return {{"components", components}, {"relations", relations}};
}

Json Model1TraceToJson(const Model1Result& result,
                       const Model1Options& options) {
  return {{"iterations", options.iterations},
          {"epsilon", options.epsilon},
          {"lowercase", options.lowercase},
          {"log_likelihood", result.log_likelihood},
          {"monotone", result.IsMonotone()},
          {"max_normalization_error", result.table.MaxNormalizationError()}};
}

Json ToJson(const Span& span) {
  return {{"start", span.start},
          {"end", span.end},
          {"label", std::string(ToString(span.label))}};
}

Span SpanFromJson(const Json& json) {
  if (!json.is_object() || !json.contains("start") || !json.contains("end") ||
      !json.contains("label") || !json["start"].is_number_unsigned() ||
      !json["end"].is_number_unsigned() || !json["label"].is_string()) {
    throw ValidationError(
        "span must be {\"start\": uint, \"end\": uint, \"label\": string}");
  }
  const auto label = ParseComponentLabel(json["label"].get<std::string>());
  if (!label) {
    throw ValidationError("unknown label '" +
                          json["label"].get<std::string>() + "'");
  }
  return {json["start"].get<std::size_t>(), json["end"].get<std::size_t>(),
          *label};
}

}  // namespace argproj
