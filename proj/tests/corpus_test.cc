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

#include <gtest/gtest.h>

#include <random>

#include "argproj/error.h"
#include "oracles.h"

namespace argproj {
namespace {

using Tags = std::vector<std::string>;

TEST(SpanTest, ValidateRejectsBadGeometry) {
  EXPECT_NO_THROW(ValidateSpans(std::vector<Span>{{0, 1}, {1, 3}}, 3));
  EXPECT_THROW(ValidateSpans(std::vector<Span>{{1, 1}}, 3), ValidationError);
  EXPECT_THROW(ValidateSpans(std::vector<Span>{{0, 4}}, 3), ValidationError);
  EXPECT_THROW(ValidateSpans(std::vector<Span>{{0, 2}, {1, 3}}, 3),
               ValidationError);
  EXPECT_THROW(ValidateSpans(std::vector<Span>{{2, 3}, {0, 1}}, 3),
               ValidationError);
}

TEST(AnnotatedSentenceTest, ConstructorValidates) {
  EXPECT_THROW(AnnotatedSentence::FromWords({"a"}, {{0, 2}}), ValidationError);
  EXPECT_THROW(AnnotatedSentence::FromWords({""}), ValidationError);
  EXPECT_THROW(AnnotatedSentence::FromWords({"a b"}), ValidationError);
  const AnnotatedSentence s = AnnotatedSentence::FromWords({"a", "."});
  EXPECT_FALSE(s.tokens()[0].is_punct);
  EXPECT_TRUE(s.tokens()[1].is_punct);
  EXPECT_EQ(s.tokens()[1].index, 1u);
}

TEST(AnnotatedSentenceTest, SpanAt) {
  const auto s = AnnotatedSentence::FromWords(
      {"a", "b", "c", "d"}, {{1, 2, ComponentLabel::kClaim}, {2, 4, ComponentLabel::kPremise}});
  EXPECT_FALSE(s.SpanAt(0).has_value());
  EXPECT_EQ(s.SpanAt(1), 0u);
  EXPECT_EQ(s.SpanAt(3), 1u);
}

TEST(IobTest, SpansToIob) {
  auto s = AnnotatedSentence::FromWords({"a", "b", "c"},
                                        {{1, 3, ComponentLabel::kPremise}});
  EXPECT_EQ(SpansToIob(s), (Tags{"O", "B-Premise", "I-Premise"}));
  EXPECT_EQ(SpansToIob(s.WithSpans({})), (Tags{"O", "O", "O"}));
  auto adjacent = AnnotatedSentence::FromWords(
      {"a", "b"}, {{0, 1, ComponentLabel::kClaim}, {1, 2, ComponentLabel::kClaim}});
  EXPECT_EQ(SpansToIob(adjacent), (Tags{"B-Claim", "B-Claim"}));
}

TEST(IobTest, IobToSpans) {
  EXPECT_EQ(IobToSpans(Tags{"B-Claim", "I-Claim", "O"}, IobMode::kStrict),
            (std::vector<Span>{{0, 2, ComponentLabel::kClaim}}));
  EXPECT_THROW(IobToSpans(Tags{"I-Claim", "I-Claim"}, IobMode::kStrict), IobError);
  EXPECT_EQ(IobToSpans(Tags{"I-Claim", "I-Claim"}, IobMode::kRepair),
            (std::vector<Span>{{0, 2, ComponentLabel::kClaim}}));
  EXPECT_EQ(IobToSpans(Tags{"B-Claim", "I-Premise"}, IobMode::kRepair),
            (std::vector<Span>{{0, 1, ComponentLabel::kClaim},
                               {1, 2, ComponentLabel::kPremise}}));
  EXPECT_THROW(IobToSpans(Tags{"B-Claim", "I-Premise"}, IobMode::kStrict), IobError);
  EXPECT_THROW(IobToSpans(Tags{"B-Foo"}, IobMode::kRepair), Error);
}

TEST(IobTest, StrictErrorCarriesIndex) {
  try {
    IobToSpans(Tags{"O", "O", "I-MajorClaim"}, IobMode::kStrict);
    FAIL();
  } catch (const IobError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(IobTest, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const AnnotatedSentence s = testing::RandomSentence(rng, 12);
    EXPECT_EQ(IobToSpans(SpansToIob(s), IobMode::kStrict), s.spans());
  }
}

TEST(ComponentStatsTest, MatchesGeneratorBookkeeping) {
  std::mt19937_64 rng(11);
  Corpus corpus{"gen", {{"d", "", {}}}};
  std::array<std::size_t, 3> expected{};
  for (int i = 0; i < 50; ++i) {
    AnnotatedSentence s = testing::RandomSentence(rng, 10);
    for (const Span& span : s.spans()) ++expected[static_cast<int>(span.label)];
    corpus.documents[0].sentences.push_back(std::move(s));
  }
  const ComponentStats stats = ComputeComponentStats(corpus);
  for (ComponentLabel label : kComponentLabels) {
    EXPECT_EQ(stats[label], expected[static_cast<int>(label)]);
  }
  EXPECT_EQ(stats.total(), expected[0] + expected[1] + expected[2]);
  EXPECT_EQ(ComputeComponentStats(Corpus{}).total(), 0u);
}

TEST(CorpusTest, Validate) {
  const auto s = AnnotatedSentence::FromWords({"a"});
  EXPECT_NO_THROW((Corpus{"c", {{"", "", {s}}, {"x", "", {s}}}}.Validate()));
  EXPECT_THROW((Corpus{"c", {{"x", "", {s}}, {"x", "", {s}}}}.Validate()),
               ValidationError);
  EXPECT_THROW((Corpus{"c", {{"x", "", {s}}, {"", "", {s}}}}.Validate()),
               ValidationError);
  EXPECT_THROW((Corpus{"c", {{"a b", "", {s}}}}.Validate()), ValidationError);
}

TEST(CorpusTest, Reshape) {
  const auto a = AnnotatedSentence::FromWords({"a"});
  const auto b = AnnotatedSentence::FromWords({"b"});
  const Corpus shape{"c", {{"x", "", {a, a}}, {"y", "", {a}}}};
  const Corpus out = Reshape(shape, {b, b, a});
  EXPECT_EQ(out.documents[0].sentences[1], b);
  EXPECT_EQ(out.documents[1].sentences[0], a);
  EXPECT_THROW(Reshape(shape, {b}), MismatchError);
}

}  // namespace
}  // namespace argproj
