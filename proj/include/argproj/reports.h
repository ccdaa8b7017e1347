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

// JSON forms of the toolkit's reports.

#ifndef ARGPROJ_REPORTS_H_
#define ARGPROJ_REPORTS_H_

#include <json.hpp>

#include "argproj/corpus.h"
#include "argproj/datasetops.h"
#include "argproj/evaluate.h"
#include "argproj/model1.h"
#include "argproj/postprocess.h"
#include "argproj/projection.h"
#include "argproj/relations.h"

namespace argproj {

using Json = nlohmann::ordered_json;

Json ToJson(const ComponentStats& stats);
Json ToJson(const RelationStats& stats);
Json ToJson(const ProjectionConfig& config);
Json ToJson(const ProjectionReport& report);
Json ToJson(const CorrectionReport& report);
Json ToJson(const ClassScores& scores);
Json ToJson(const EvalReport& report);
Json ToJson(const RelationScores& scores);
Json ToJson(const VariantComparison& comparison);
// {"components": {split: {...}, "Total": {...}}, "relations": {...}}.
Json ToJson(const Distribution& distribution);
Json Model1TraceToJson(const Model1Result& result, const Model1Options& options);

Json ToJson(const Span& span);
// Throws ValidationError on a malformed span object.
Span SpanFromJson(const Json& json);

}  // namespace argproj

#endif  // ARGPROJ_REPORTS_H_
