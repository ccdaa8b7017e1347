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

#include "argproj/postprocess.h"

#include <algorithm>
#include <utility>

#include "argproj/error.h"
#include "argproj/parallel.h"
#include "argproj/projection.h"
#include "argproj/text.h"

namespace argproj {

std::string_view ToString(CorrectionRule rule) {
  switch (rule) {
    case CorrectionRule::kFullComponentExpansion:
      return "full_component_expansion";
    case CorrectionRule::kArticleFix:
      return "article_fix";
    case CorrectionRule::kPunctuationAbsorption:
      return "punctuation_absorption";
  }
  return "?";
}

std::optional<CorrectionRule> ParseCorrectionRule(std::string_view text) {
  for (CorrectionRule rule : kCorrectionRules) {
    if (ToString(rule) == text) return rule;
  }
  return std::nullopt;
}

std::set<std::string, std::less<>> DefaultSpanishArticles() {
  return {"el", "la", "los", "las", "un", "una", "unos", "unas"};
}

std::set<std::string, std::less<>> ParseLexicon(std::string_view text) {
  std::set<std::string, std::less<>> words;
  for (std::string_view line : SplitLines(text)) {
    const auto pieces = SplitTokens(line);
    if (pieces.empty() || pieces.front().starts_with('#')) continue;
    words.insert(CaseFold(pieces.front()));
  }
  return words;
}

void RulePipelineConfig::Validate() const {
  std::set<CorrectionRule> seen;
  for (CorrectionRule rule : rules) {
    if (!seen.insert(rule).second) {
      throw ValidationError("rule " + std::string(ToString(rule)) +
                            " listed twice");
    }
  }
  if (seen.contains(CorrectionRule::kArticleFix) && article_lexicon.empty()) {
    throw ValidationError("article_fix needs a non-empty article lexicon");
  }
}

CorrectionResult ApplyFullComponentRule(const AnnotatedSentence& source,
                                        const AnnotatedSentence& target,
                                        bool include_punctuation) {
  if (ClassifySentence(source) != SentenceClass::kFullComponent ||
      target.size() == 0) {
    return {target, false, 0};
  }
  const ComponentLabel label = source.spans().front().label;
  Span wanted{0, target.size(), label};
  if (!include_punctuation) {
    const auto& tokens = target.tokens();
    while (wanted.start < wanted.end && tokens[wanted.start].is_punct) {
      ++wanted.start;
    }
    while (wanted.end > wanted.start && tokens[wanted.end - 1].is_punct) {
      --wanted.end;
    }
    if (wanted.start == wanted.end) return {target, false, 0};
    if (ClassifySentence(target) == SentenceClass::kFullComponent &&
        target.spans().front().label == label) {
      return {target, false, 0};
    }
  }
  const auto& spans = target.spans();
  if (spans.size() == 1 && spans.front() == wanted) return {target, false, 0};

  std::size_t modified = 1;
  for (const Span& span : spans) {
    if (span != wanted) ++modified;
  }
  if (std::find(spans.begin(), spans.end(), wanted) != spans.end()) {
    --modified;
  }
  return {target.WithSpans({wanted}), true, modified};
}

CorrectionResult ApplyArticleFix(
    const AnnotatedSentence& target,
    const std::set<std::string, std::less<>>& lexicon) {
  std::vector<Span> spans = target.spans();
  std::size_t modified = 0;
  std::size_t previous_end = 0;
  for (Span& span : spans) {
    const std::size_t original = span.start;
    while (span.start > previous_end &&
           lexicon.contains(CaseFold(target.tokens()[span.start - 1].text))) {
      --span.start;
    }
    if (span.start != original) ++modified;
    previous_end = span.end;
  }
  if (modified == 0) return {target, false, 0};
  return {target.WithSpans(std::move(spans)), true, modified};
}

CorrectionResult ApplyPunctuationAbsorption(const AnnotatedSentence& target) {
  std::vector<Span> spans = target.spans();
  const auto& tokens = target.tokens();
  std::size_t modified = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::size_t limit =
        i + 1 < spans.size() ? spans[i + 1].start : tokens.size();
    const std::size_t original = spans[i].end;
    while (spans[i].end < limit && tokens[spans[i].end].is_punct) {
      ++spans[i].end;
    }
    if (spans[i].end != original) ++modified;
  }
  if (modified == 0) return {target, false, 0};
  return {target.WithSpans(std::move(spans)), true, modified};
}

std::size_t CorrectionReport::total_applications() const {
  std::size_t total = 0;
  for (const RuleCounts& counts : rules) total += counts.applications;
  return total;
}

PostprocessResult RunPipeline(const Corpus& source, const Corpus& target,
                              const RulePipelineConfig& config, int jobs) {
  config.Validate();
  const auto sources = source.Sentences();
  const auto targets = target.Sentences();
  if (sources.size() != targets.size()) {
    throw MismatchError("source corpus has " + std::to_string(sources.size()) +
                        " sentences but target corpus has " +
                        std::to_string(targets.size()));
  }

  struct SentenceLog {
    std::array<std::size_t, 3> spans_modified{};
    std::array<bool, 3> changed{};
  };
  std::vector<std::optional<AnnotatedSentence>> corrected(targets.size());
  std::vector<SentenceLog> logs(targets.size());
  ParallelFor(targets.size(), jobs, [&](std::size_t i) {
    AnnotatedSentence sentence = *targets[i];
    for (CorrectionRule rule : config.rules) {
      CorrectionResult result{sentence, false, 0};
      switch (rule) {
        case CorrectionRule::kFullComponentExpansion:
          result = ApplyFullComponentRule(*sources[i], sentence,
                                          config.include_punctuation);
          break;
        case CorrectionRule::kArticleFix:
          result = ApplyArticleFix(sentence, config.article_lexicon);
          break;
        case CorrectionRule::kPunctuationAbsorption:
          result = ApplyPunctuationAbsorption(sentence);
          break;
      }
      const auto r = static_cast<std::size_t>(rule);
      logs[i].changed[r] = result.changed;
      logs[i].spans_modified[r] = result.spans_modified;
      sentence = std::move(result.sentence);
    }
    corrected[i] = std::move(sentence);
  });

  PostprocessResult out;
  out.report.sentences = targets.size();
  std::vector<AnnotatedSentence> sentences;
  sentences.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    bool touched = false;
    for (std::size_t r = 0; r < 3; ++r) {
      if (!logs[i].changed[r]) continue;
      touched = true;
      ++out.report.rules[r].applications;
      out.report.rules[r].spans_modified += logs[i].spans_modified[r];
    }
    if (touched) ++out.report.sentences_touched;
    sentences.push_back(std::move(*corrected[i]));
  }
  out.corpus = Reshape(target, std::move(sentences));
  return out;
}

}  // namespace argproj
