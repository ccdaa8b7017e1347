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

// Annotation projection: carries argument component spans from an annotated
// source sentence onto its translation through a word alignment.
//
// For each source span, in source order:
//   1. Collect the target tokens linked to any token of the span. None:
//      the span is unprojectable (dropped, or an error).
//   2. Group the linked tokens into clusters, starting a new cluster when
//      more than `gap_tolerance` unlinked tokens separate two linked ones.
//      Keep the widest cluster; ties go to the leftmost. The projected
//      interval runs from its first to its last linked token.
//   3. Without include_punctuation, trim punctuation tokens off both ends.
//   4. Move the start past the end of the previously projected span; a
//      span left empty is dropped.

#ifndef ARGPROJ_PROJECTION_H_
#define ARGPROJ_PROJECTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argproj/alignment.h"
#include "argproj/corpus.h"
#include "argproj/error.h"

namespace argproj {

enum class UnprojectablePolicy { kDrop, kError };

struct ProjectionConfig {
  std::size_t gap_tolerance = 2;
  bool include_punctuation = true;
  UnprojectablePolicy on_unprojectable = UnprojectablePolicy::kDrop;
};

// Raised under UnprojectablePolicy::kError.
class UnprojectableSpanError : public Error {
 public:
  using Error::Error;
};

enum class SentenceClass { kFullO, kFullComponent, kPartial };

// "full_O", "full_component", "partial".
std::string_view ToString(SentenceClass value);

// full_O: no spans. full_component: a single span covering every
// non-punctuation token. Anything else is partial.
SentenceClass ClassifySentence(const AnnotatedSentence& sentence);

enum class SpanStatus { kProjected, kDropped };

struct ProjectionOutcome {
  // Class of the source sentence.
  SentenceClass classification = SentenceClass::kFullO;
  // One entry per source span.
  std::vector<SpanStatus> span_status;
  AnnotatedSentence sentence;
};

// Throws MismatchError if the alignment grid does not match the sentence
// lengths, UnprojectableSpanError per config.
ProjectionOutcome ProjectSentence(const AnnotatedSentence& source,
                                  std::vector<Token> target_tokens,
                                  const SentenceAlignment& alignment,
                                  const ProjectionConfig& config);

struct SentenceClassCounts {
  std::size_t full_o = 0;
  std::size_t full_component = 0;
  std::size_t partial = 0;

  void Add(SentenceClass value);
  bool operator==(const SentenceClassCounts&) const = default;
};

struct ProjectionReport {
  ProjectionConfig config;
  std::size_t overall = 0;
  // Source-side classes; the counted "full component" test ignores
  // punctuation tokens.
  SentenceClassCounts source;
  // The same classes computed on the projected target sentences.
  SentenceClassCounts target;
  std::size_t projected_spans = 0;
  std::size_t dropped_spans = 0;
};

struct ProjectedCorpus {
  Corpus corpus;
  ProjectionReport report;
};

// Target sentences and alignments are matched to the source corpus
// sentence by sentence. Output order never depends on `jobs`.
ProjectedCorpus ProjectCorpus(const Corpus& source,
                              std::span<const std::vector<std::string>> targets,
                              std::span<const SentenceAlignment> alignments,
                              const ProjectionConfig& config, int jobs = 1);

// Same, from the raw contents of a tokenized target file (one sentence per
// line) and a Pharaoh file. Throws MismatchError on line-count mismatch
// and ParseError on bad lines.
ProjectedCorpus ProjectCorpusFromText(const Corpus& source,
                                      std::string_view target_text,
                                      std::string_view alignment_text,
                                      const ProjectionConfig& config,
                                      int jobs = 1);

}  // namespace argproj

#endif  // ARGPROJ_PROJECTION_H_
