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

#include "argproj/corpus.h"

#include <set>
#include <utility>

#include "argproj/error.h"
#include "argproj/text.h"

namespace argproj {

std::string_view ToString(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::kClaim:
      return "Claim";
    case ComponentLabel::kPremise:
      return "Premise";
    case ComponentLabel::kMajorClaim:
      return "MajorClaim";
  }
  return "?";
}

std::optional<ComponentLabel> ParseComponentLabel(std::string_view text) {
  for (ComponentLabel label : kComponentLabels) {
    if (ToString(label) == text) return label;
  }
  return std::nullopt;
}

Token Token::Make(std::string text, std::size_t index) {
  Token token;
  token.is_punct = IsPunctuation(text);
  token.text = std::move(text);
  token.index = index;
  return token;
}

void ValidateSpans(std::span<const Span> spans, std::size_t num_tokens) {
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Span& span = spans[i];
    if (span.start >= span.end) {
      throw ValidationError("span " + std::to_string(i) + " is empty");
    }
    if (span.end > num_tokens) {
      throw ValidationError("span " + std::to_string(i) + " [" +
                            std::to_string(span.start) + ", " +
                            std::to_string(span.end) + ") exceeds " +
                            std::to_string(num_tokens) + " tokens");
    }
    if (i > 0 && span.start < previous_end) {
      throw ValidationError("span " + std::to_string(i) +
                            " overlaps or precedes the previous span");
    }
    previous_end = span.end;
  }
}

AnnotatedSentence::AnnotatedSentence(std::vector<Token> tokens,
                                     std::vector<Span> spans)
    : tokens_(std::move(tokens)), spans_(std::move(spans)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const Token& token = tokens_[i];
    if (token.index != i) {
      throw ValidationError("token " + std::to_string(i) + " has index " +
                            std::to_string(token.index));
    }
    if (token.text.empty()) {
      throw ValidationError("token " + std::to_string(i) + " is empty");
    }
    if (ContainsWhitespace(token.text)) {
      throw ValidationError("token " + std::to_string(i) +
                            " contains whitespace");
    }
  }
  ValidateSpans(spans_, tokens_.size());
}

AnnotatedSentence AnnotatedSentence::FromWords(
    const std::vector<std::string>& words, std::vector<Span> spans) {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    tokens.push_back(Token::Make(words[i], i));
  }
  return AnnotatedSentence(std::move(tokens), std::move(spans));
}

AnnotatedSentence AnnotatedSentence::WithSpans(std::vector<Span> spans) const {
  ValidateSpans(spans, tokens_.size());
  AnnotatedSentence copy = *this;
  copy.spans_ = std::move(spans);
  return copy;
}

std::optional<std::size_t> AnnotatedSentence::SpanAt(std::size_t token) const {
  for (std::size_t i = 0; i < spans_.size(); ++i) {
    if (spans_[i].Contains(token)) return i;
    if (spans_[i].start > token) break;
  }
  return std::nullopt;
}

std::size_t Corpus::SentenceCount() const {
  std::size_t count = 0;
  for (const Document& document : documents) count += document.sentences.size();
  return count;
}

std::vector<const AnnotatedSentence*> Corpus::Sentences() const {
  std::vector<const AnnotatedSentence*> out;
  out.reserve(SentenceCount());
  for (const Document& document : documents) {
    for (const AnnotatedSentence& sentence : document.sentences) {
      out.push_back(&sentence);
    }
  }
  return out;
}

void Corpus::Validate() const {
  std::set<std::string_view> ids;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const Document& document = documents[d];
    if (document.id.empty()) {
      if (d != 0 || document.sentences.empty()) {
        throw ValidationError("document " + std::to_string(d) +
                              " has an empty id");
      }
    } else if (!ids.insert(document.id).second) {
      throw ValidationError("duplicate document id '" + document.id + "'");
    }
    if (ContainsWhitespace(document.id) ||
        ContainsWhitespace(document.origin)) {
      throw ValidationError("document id or origin contains whitespace");
    }
    for (std::size_t s = 0; s < document.sentences.size(); ++s) {
      if (document.sentences[s].size() == 0) {
        throw ValidationError("sentence " + std::to_string(s) +
                              " of document '" + document.id +
                              "' has no tokens");
      }
    }
  }
}

Corpus Reshape(const Corpus& shape, std::vector<AnnotatedSentence> sentences) {
  if (sentences.size() != shape.SentenceCount()) {
    throw MismatchError("expected " + std::to_string(shape.SentenceCount()) +
                        " sentences, got " + std::to_string(sentences.size()));
  }
  Corpus out;
  out.name = shape.name;
  std::size_t next = 0;
  for (const Document& document : shape.documents) {
    Document copy;
    copy.id = document.id;
    copy.origin = document.origin;
    copy.sentences.reserve(document.sentences.size());
    for (std::size_t i = 0; i < document.sentences.size(); ++i) {
      copy.sentences.push_back(std::move(sentences[next++]));
    }
    out.documents.push_back(std::move(copy));
  }
  return out;
}

std::optional<IobTag> ParseIobTag(std::string_view text) {
  if (text == "O") return IobTag{};
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  IobTag tag;
  if (text[0] == 'B') {
    tag.kind = IobTag::Kind::kBegin;
  } else if (text[0] == 'I') {
    tag.kind = IobTag::Kind::kInside;
  } else {
    return std::nullopt;
  }
  const auto label = ParseComponentLabel(text.substr(2));
  if (!label) return std::nullopt;
  tag.label = *label;
  return tag;
}

std::string FormatIobTag(const IobTag& tag) {
  switch (tag.kind) {
    case IobTag::Kind::kOutside:
      return "O";
    case IobTag::Kind::kBegin:
      return "B-" + std::string(ToString(tag.label));
    case IobTag::Kind::kInside:
      return "I-" + std::string(ToString(tag.label));
  }
  return "O";
}

std::vector<std::string> SpansToIob(std::span<const Span> spans,
                                    std::size_t num_tokens) {
  std::vector<std::string> tags(num_tokens, "O");
  for (const Span& span : spans) {
    const std::string label(ToString(span.label));
    tags[span.start] = "B-" + label;
    for (std::size_t i = span.start + 1; i < span.end; ++i) {
      tags[i] = "I-" + label;
    }
  }
  return tags;
}

std::vector<std::string> SpansToIob(const AnnotatedSentence& sentence) {
  return SpansToIob(sentence.spans(), sentence.size());
}

std::vector<Span> IobToSpans(std::span<const std::string> tags, IobMode mode) {
  std::vector<Span> spans;
  std::optional<Span> open;
  auto close = [&](std::size_t end) {
    if (open) {
      open->end = end;
      spans.push_back(*open);
      open.reset();
    }
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const auto tag = ParseIobTag(tags[i]);
    if (!tag) {
      throw ValidationError("invalid tag '" + tags[i] + "' at tag " +
                            std::to_string(i));
    }
    switch (tag->kind) {
      case IobTag::Kind::kOutside:
        close(i);
        break;
      case IobTag::Kind::kBegin:
        close(i);
        open = Span{i, i, tag->label};
        break;
      case IobTag::Kind::kInside:
        if (open && open->label == tag->label) break;
        if (mode == IobMode::kStrict) {
          if (open) {
            throw IobError(tags[i] + " inside a " +
                               std::string(ToString(open->label)) + " span",
                           i);
          }
          throw IobError("I- without opening B-", i);
        }
        close(i);
        open = Span{i, i, tag->label};
        break;
    }
  }
  close(tags.size());
  return spans;
}

ComponentStats& ComponentStats::operator+=(const ComponentStats& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

ComponentStats ComputeComponentStats(const AnnotatedSentence& sentence) {
  ComponentStats stats;
  for (const Span& span : sentence.spans()) ++stats[span.label];
  return stats;
}

ComponentStats ComputeComponentStats(const Document& document) {
  ComponentStats stats;
  for (const AnnotatedSentence& sentence : document.sentences) {
    stats += ComputeComponentStats(sentence);
  }
  return stats;
}

ComponentStats ComputeComponentStats(const Corpus& corpus) {
  ComponentStats stats;
  for (const Document& document : corpus.documents) {
    stats += ComputeComponentStats(document);
  }
  return stats;
}

}  // namespace argproj
