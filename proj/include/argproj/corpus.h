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

// Token-level annotated corpora: argument component spans over pre-tokenized
// sentences, and the IOB encoding used to store them.

#ifndef ARGPROJ_CORPUS_H_
#define ARGPROJ_CORPUS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argproj {

enum class ComponentLabel { kClaim, kPremise, kMajorClaim };

inline constexpr std::array<ComponentLabel, 3> kComponentLabels = {
    ComponentLabel::kClaim, ComponentLabel::kPremise,
    ComponentLabel::kMajorClaim};

// "Claim", "Premise", "MajorClaim".
std::string_view ToString(ComponentLabel label);
std::optional<ComponentLabel> ParseComponentLabel(std::string_view text);

struct Token {
  std::string text;
  std::size_t index = 0;
  bool is_punct = false;

  // Computes is_punct from the text.
  static Token Make(std::string text, std::size_t index);

  bool operator==(const Token&) const = default;
};

// Half-open token interval [start, end) carrying a component label.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  ComponentLabel label = ComponentLabel::kClaim;

  std::size_t size() const { return end - start; }
  bool Contains(std::size_t index) const {
    return index >= start && index < end;
  }
  bool operator==(const Span&) const = default;
};

// Throws ValidationError unless every span is non-empty, inside
// [0, num_tokens), sorted by start and pairwise disjoint.
void ValidateSpans(std::span<const Span> spans, std::size_t num_tokens);

// A tokenized sentence with its argument component spans. Immutable once
// built; every constructor validates.
class AnnotatedSentence {
 public:
  AnnotatedSentence(std::vector<Token> tokens, std::vector<Span> spans);

  // Builds tokens (with dense indices) from plain strings.
  static AnnotatedSentence FromWords(const std::vector<std::string>& words,
                                     std::vector<Span> spans = {});

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<Span>& spans() const { return spans_; }
  std::size_t size() const { return tokens_.size(); }

  // Same tokens, different spans.
  AnnotatedSentence WithSpans(std::vector<Span> spans) const;

  // Index of the span covering `token`, if any.
  std::optional<std::size_t> SpanAt(std::size_t token) const;

  bool operator==(const AnnotatedSentence&) const = default;

 private:
  std::vector<Token> tokens_;
  std::vector<Span> spans_;
};

struct Document {
  std::string id;
  // Name of the corpus the document came from, when merged.
  std::string origin;
  std::vector<AnnotatedSentence> sentences;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;

  std::size_t SentenceCount() const;
  // Sentences of all documents in order.
  std::vector<const AnnotatedSentence*> Sentences() const;

  // Throws ValidationError on duplicate document ids or an empty id that
  // cannot be serialized (anything but a non-empty first document).
  void Validate() const;

  bool operator==(const Corpus&) const = default;
};

// Builds a corpus with the same document structure as `shape`, taking
// sentences from `sentences` in order. Throws MismatchError on a count
// mismatch.
Corpus Reshape(const Corpus& shape, std::vector<AnnotatedSentence> sentences);

// IOB tagging.

enum class IobMode {
  kStrict,  // I- after O or after another label is an error.
  kRepair,  // such an I- opens a new span, as if it were B-.
};

struct IobTag {
  enum class Kind { kOutside, kBegin, kInside };
  Kind kind = Kind::kOutside;
  ComponentLabel label = ComponentLabel::kClaim;
};

std::optional<IobTag> ParseIobTag(std::string_view text);
std::string FormatIobTag(const IobTag& tag);

std::vector<std::string> SpansToIob(std::span<const Span> spans,
                                    std::size_t num_tokens);
std::vector<std::string> SpansToIob(const AnnotatedSentence& sentence);

// Throws IobError (strict mode only) and ValidationError for unknown tags.
std::vector<Span> IobToSpans(std::span<const std::string> tags, IobMode mode);

// Span counts per label.
struct ComponentStats {
  std::array<std::size_t, 3> counts{};

  std::size_t& operator[](ComponentLabel label) {
    return counts[static_cast<std::size_t>(label)];
  }
  std::size_t operator[](ComponentLabel label) const {
    return counts[static_cast<std::size_t>(label)];
  }
  std::size_t total() const { return counts[0] + counts[1] + counts[2]; }

  ComponentStats& operator+=(const ComponentStats& other);
  bool operator==(const ComponentStats&) const = default;
};

ComponentStats ComputeComponentStats(const AnnotatedSentence& sentence);
ComponentStats ComputeComponentStats(const Document& document);
ComponentStats ComputeComponentStats(const Corpus& corpus);

}  // namespace argproj

#endif  // ARGPROJ_CORPUS_H_
