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

#include "argproj/projection.h"

#include <optional>
#include <utility>

#include "argproj/parallel.h"
#include "argproj/text.h"

namespace argproj {

std::string_view ToString(SentenceClass value) {
  switch (value) {
    case SentenceClass::kFullO:
      return "full_O";
    case SentenceClass::kFullComponent:
      return "full_component";
    case SentenceClass::kPartial:
      return "partial";
  }
  return "?";
}

SentenceClass ClassifySentence(const AnnotatedSentence& sentence) {
  const auto& spans = sentence.spans();
  if (spans.empty()) return SentenceClass::kFullO;
  if (spans.size() > 1) return SentenceClass::kPartial;
  const Span& span = spans.front();
  for (const Token& token : sentence.tokens()) {
    if (!token.is_punct && !span.Contains(token.index)) {
      return SentenceClass::kPartial;
    }
  }
  return SentenceClass::kFullComponent;
}

void SentenceClassCounts::Add(SentenceClass value) {
  switch (value) {
    case SentenceClass::kFullO:
      ++full_o;
      break;
    case SentenceClass::kFullComponent:
      ++full_component;
      break;
    case SentenceClass::kPartial:
      ++partial;
      break;
  }
}

namespace {

// Widest cluster of linked positions; see the header for the rules.
std::optional<std::pair<std::size_t, std::size_t>> DensestInterval(
    const std::vector<bool>& linked, std::size_t gap_tolerance) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t cluster_start = 0;
  std::size_t last = 0;
  bool open = false;
  auto offer = [&] {
    const std::size_t width = last + 1 - cluster_start;
    if (!best || width > best->second - best->first) {
      best = {cluster_start, last + 1};
    }
  };
  for (std::size_t t = 0; t < linked.size(); ++t) {
    if (!linked[t]) continue;
    if (open && t - last - 1 > gap_tolerance) {
      offer();
      cluster_start = t;
    } else if (!open) {
      cluster_start = t;
      open = true;
    }
    last = t;
  }
  if (open) offer();
  return best;
}

}  // namespace

ProjectionOutcome ProjectSentence(const AnnotatedSentence& source,
                                  std::vector<Token> target_tokens,
                                  const SentenceAlignment& alignment,
                                  const ProjectionConfig& config) {
  if (alignment.src_len() != source.size() ||
      alignment.tgt_len() != target_tokens.size()) {
    throw MismatchError(
        "alignment grid " + std::to_string(alignment.src_len()) + "x" +
        std::to_string(alignment.tgt_len()) + " does not match sentence pair " +
        std::to_string(source.size()) + "x" +
        std::to_string(target_tokens.size()));
  }

  // Links grouped by source token.
  std::vector<std::vector<std::size_t>> targets_of(source.size());
  for (const AlignmentLink& link : alignment.links()) {
    targets_of[link.src].push_back(link.tgt);
  }

  std::vector<Span> projected;
  std::vector<SpanStatus> status;
  std::vector<bool> linked(target_tokens.size());
  std::size_t previous_end = 0;
  for (const Span& span : source.spans()) {
    std::fill(linked.begin(), linked.end(), false);
    bool any = false;
    for (std::size_t s = span.start; s < span.end; ++s) {
      for (std::size_t t : targets_of[s]) {
        linked[t] = true;
        any = true;
      }
    }
    if (!any && config.on_unprojectable == UnprojectablePolicy::kError) {
      throw UnprojectableSpanError(
          "span [" + std::to_string(span.start) + ", " +
          std::to_string(span.end) + ") has no aligned target token");
    }
    auto interval = DensestInterval(linked, config.gap_tolerance);
    if (interval && !config.include_punctuation) {
      auto& [start, end] = *interval;
      while (start < end && target_tokens[start].is_punct) ++start;
      while (end > start && target_tokens[end - 1].is_punct) --end;
    }
    if (interval) interval->first = std::max(interval->first, previous_end);
    if (!interval || interval->first >= interval->second) {
      status.push_back(SpanStatus::kDropped);
      continue;
    }
    projected.push_back({interval->first, interval->second, span.label});
    previous_end = interval->second;
    status.push_back(SpanStatus::kProjected);
  }

  return ProjectionOutcome{
      ClassifySentence(source), std::move(status),
      AnnotatedSentence(std::move(target_tokens), std::move(projected))};
}

ProjectedCorpus ProjectCorpus(const Corpus& source,
                              std::span<const std::vector<std::string>> targets,
                              std::span<const SentenceAlignment> alignments,
                              const ProjectionConfig& config, int jobs) {
  const auto sentences = source.Sentences();
  if (targets.size() != sentences.size() ||
      alignments.size() != sentences.size()) {
    throw MismatchError("source corpus has " +
                        std::to_string(sentences.size()) +
                        " sentences, target has " +
                        std::to_string(targets.size()) +
                        ", alignments have " +
                        std::to_string(alignments.size()));
  }
  std::vector<std::optional<ProjectionOutcome>> outcomes(sentences.size());
  ParallelFor(sentences.size(), jobs, [&](std::size_t i) {
    std::vector<Token> tokens;
    tokens.reserve(targets[i].size());
    for (std::size_t t = 0; t < targets[i].size(); ++t) {
      tokens.push_back(Token::Make(targets[i][t], t));
    }
    try {
      outcomes[i] = ProjectSentence(*sentences[i], std::move(tokens),
                                    alignments[i], config);
    } catch (const UnprojectableSpanError& e) {
      throw UnprojectableSpanError("sentence " + std::to_string(i + 1) +
                                   ": " + e.what());
    } catch (const MismatchError& e) {
      throw MismatchError("sentence " + std::to_string(i + 1) + ": " +
                          e.what());
    }
  });

  ProjectedCorpus result;
  result.report.config = config;
  result.report.overall = sentences.size();
  std::vector<AnnotatedSentence> projected;
  projected.reserve(sentences.size());
  for (auto& outcome : outcomes) {
    result.report.source.Add(outcome->classification);
    result.report.target.Add(ClassifySentence(outcome->sentence));
    for (SpanStatus s : outcome->span_status) {
      if (s == SpanStatus::kProjected) {
        ++result.report.projected_spans;
      } else {
        ++result.report.dropped_spans;
      }
    }
    projected.push_back(std::move(outcome->sentence));
  }
  result.corpus = Reshape(source, std::move(projected));
  return result;
}

ProjectedCorpus ProjectCorpusFromText(const Corpus& source,
                                      std::string_view target_text,
                                      std::string_view alignment_text,
                                      const ProjectionConfig& config,
                                      int jobs) {
  const auto sentences = source.Sentences();
  const auto target_lines = SplitLines(target_text);
  const auto alignment_lines = SplitLines(alignment_text);
  const std::size_t alignment_count = alignment_lines.size();
  if (target_lines.size() != sentences.size() ||
      alignment_count != sentences.size()) {
    throw MismatchError("line counts differ: source corpus has " +
                        std::to_string(sentences.size()) +
                        " sentences, target file " +
                        std::to_string(target_lines.size()) +
                        " lines, alignment file " +
                        std::to_string(alignment_count) + " lines");
  }
  std::vector<std::vector<std::string>> targets(sentences.size());
  std::vector<SentenceAlignment> alignments(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    targets[i] = SplitTokens(target_lines[i]);
    if (targets[i].empty()) {
      throw ParseError("empty target sentence", i + 1);
    }
    alignments[i] = ParsePharaoh(alignment_lines[i], sentences[i]->size(),
                                 targets[i].size(), i + 1);
  }
  return ProjectCorpus(source, targets, alignments, config, jobs);
}

}  // namespace argproj
