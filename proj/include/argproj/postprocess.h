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

// Automatic corrections applied to projected corpora. Each rule only moves
// span boundaries; labels are never changed.

#ifndef ARGPROJ_POSTPROCESS_H_
#define ARGPROJ_POSTPROCESS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "argproj/corpus.h"

namespace argproj {

enum class CorrectionRule {
  kFullComponentExpansion,
  kArticleFix,
  kPunctuationAbsorption,
};

inline constexpr std::array<CorrectionRule, 3> kCorrectionRules = {
    CorrectionRule::kFullComponentExpansion, CorrectionRule::kArticleFix,
    CorrectionRule::kPunctuationAbsorption};

// "full_component_expansion", "article_fix", "punctuation_absorption".
std::string_view ToString(CorrectionRule rule);
std::optional<CorrectionRule> ParseCorrectionRule(std::string_view text);

// el, la, los, las, un, una, unos, unas.
std::set<std::string, std::less<>> DefaultSpanishArticles();

// One word per line; blank lines and '#' comments are skipped. Words are
// case-folded.
std::set<std::string, std::less<>> ParseLexicon(std::string_view text);

struct RulePipelineConfig {
  std::vector<CorrectionRule> rules = {kCorrectionRules.begin(),
                                       kCorrectionRules.end()};
  std::set<std::string, std::less<>> article_lexicon = DefaultSpanishArticles();
  // Whether an expanded full component also covers leading and trailing
  // punctuation.
  bool include_punctuation = true;

  // Throws ValidationError on an empty lexicon with article_fix enabled or
  // a rule listed twice.
  void Validate() const;
};

struct CorrectionResult {
  AnnotatedSentence sentence;
  bool changed = false;
  // Spans whose boundaries moved, plus spans created.
  std::size_t spans_modified = 0;
};

// If the source is a full component, the target becomes one span with the
// source label over the whole sentence. Without include_punctuation the
// span leaves out leading and trailing punctuation, and any span that
// already covers all non-punctuation tokens with that label is kept.
CorrectionResult ApplyFullComponentRule(const AnnotatedSentence& source,
                                        const AnnotatedSentence& target,
                                        bool include_punctuation = true);

// Grows each span leftwards over unannotated tokens found in the lexicon.
CorrectionResult ApplyArticleFix(
    const AnnotatedSentence& target,
    const std::set<std::string, std::less<>>& lexicon);

// Grows each span rightwards over unannotated punctuation tokens.
CorrectionResult ApplyPunctuationAbsorption(const AnnotatedSentence& target);

struct CorrectionReport {
  struct RuleCounts {
    // Sentences the rule changed.
    std::size_t applications = 0;
    std::size_t spans_modified = 0;
  };
  std::array<RuleCounts, 3> rules{};
  // Sentences changed by at least one rule.
  std::size_t sentences_touched = 0;
  std::size_t sentences = 0;

  RuleCounts& operator[](CorrectionRule rule) {
    return rules[static_cast<std::size_t>(rule)];
  }
  const RuleCounts& operator[](CorrectionRule rule) const {
    return rules[static_cast<std::size_t>(rule)];
  }
  std::size_t total_applications() const;
};

struct PostprocessResult {
  Corpus corpus;
  CorrectionReport report;
};

// Applies the enabled rules, in order, to each target sentence. Throws
// MismatchError when the corpora are not sentence-aligned.
PostprocessResult RunPipeline(const Corpus& source, const Corpus& target,
                              const RulePipelineConfig& config, int jobs = 1);

}  // namespace argproj

#endif  // ARGPROJ_POSTPROCESS_H_
