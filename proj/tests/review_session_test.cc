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


#include "argproj/review_session.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <thread>

#include "argproj/conll.h"
#include "argproj/text.h"
#include "oracles.h"

namespace argproj {
namespace {

using Spans = std::vector<Span>;
constexpr auto kClaim = ComponentLabel::kClaim;
constexpr auto kPremise = ComponentLabel::kPremise;

// Ten sentence pairs; sentence 0 is a source full component.
std::pair<Corpus, Corpus> TenPairs() {
  Corpus source{"en", {{"d1", "", {}}, {"d2", "", {}}}};
  Corpus target{"es", {{"d1", "", {}}, {"d2", "", {}}}};
  for (int i = 0; i < 10; ++i) {
    Document& src = source.documents[i / 5];
    Document& tgt = target.documents[i / 5];
    if (i == 0) {
      src.sentences.push_back(AnnotatedSentence::FromWords({"a", "b", "."}, {{0, 2, kClaim}}));
    } else if (i % 3 == 0) {
      src.sentences.push_back(AnnotatedSentence::FromWords({"a", "b", "c"}));
    } else {
      src.sentences.push_back(
          AnnotatedSentence::FromWords({"a", "b", "c"}, {{1, 3, kPremise}}));
    }
    tgt.sentences.push_back(
        AnnotatedSentence::FromWords({"x", "y", "z", "."}, {{1, 3, kPremise}}));
  }
  return {source, target};
}

class ReviewSessionTest : public ::testing::Test {
 protected:
  ReviewSessionTest() : dir_("session") {
    auto [source, target] = TenPairs();
    ReviewSession::Create(dir_.path() / "s", source, target);
  }

  std::filesystem::path Dir() const { return dir_.path() / "s"; }

  testing::TempDir dir_;
};

TEST_F(ReviewSessionTest, CreateRefusesExistingOrMismatched) {
  auto [source, target] = TenPairs();
  EXPECT_TRUE(ReviewSession::Exists(Dir()));
  EXPECT_THROW(ReviewSession::Create(Dir(), source, target), Error);
  target.documents.pop_back();
  EXPECT_THROW(ReviewSession::Create(dir_.path() / "t", source, target), MismatchError);
}

TEST_F(ReviewSessionTest, QueueSkipsFullComponents) {
  ReviewSession session(Dir(), {});
  const ReviewPage page = session.List(std::nullopt, std::nullopt, 1, 100);
  EXPECT_EQ(page.total, 9u);
  for (const ReviewItem& item : page.items) {
    EXPECT_NE(item.outcome, SentenceClass::kFullComponent);
  }
  ReviewQueueConfig all;
  all.skip_full_components = false;
  EXPECT_EQ(ReviewSession(Dir(), all).List(std::nullopt, std::nullopt, 1, 100).total, 10u);
}

TEST_F(ReviewSessionTest, Paging) {
  ReviewSession session(Dir(), {});
  const ReviewPage second = session.List(std::nullopt, std::nullopt, 2, 4);
  EXPECT_EQ(second.total, 9u);
  ASSERT_EQ(second.items.size(), 4u);
  EXPECT_EQ(second.items[0].id, 5u);
  EXPECT_TRUE(session.List(std::nullopt, std::nullopt, 4, 4).items.empty());
  EXPECT_EQ(session.List(std::nullopt, SentenceClass::kFullO, 1, 100).total, 3u);
}

TEST_F(ReviewSessionTest, CorrectAcceptSkip) {
  ReviewSession session(Dir(), {});
  const ReviewItem edited = session.Correct(1, {{0, 4, kClaim}});
  EXPECT_EQ(edited.status, ReviewStatus::kEdited);
  EXPECT_EQ(session.Get(1).target.spans(), (Spans{{0, 4, kClaim}}));
  EXPECT_EQ(session.Get(1).initial_spans, (Spans{{1, 3, kPremise}}));

  const ReviewItem accepted = session.Correct(2, {{1, 3, kPremise}});
  EXPECT_EQ(accepted.status, ReviewStatus::kAccepted);
  // Accepting an edited item keeps it edited.
  EXPECT_EQ(session.Correct(1, {{0, 4, kClaim}}).status, ReviewStatus::kEdited);

  EXPECT_EQ(session.Skip(3).status, ReviewStatus::kSkipped);
  EXPECT_THROW(session.Skip(3), ReviewConflict);
  EXPECT_THROW(session.Skip(1), ReviewConflict);
  EXPECT_THROW(session.Skip(99), ReviewNotFound);
  EXPECT_THROW(session.Get(10), ReviewNotFound);

  const ReviewAudit audit = session.Audit();
  EXPECT_EQ(audit.items, 10u);
  EXPECT_EQ(audit.queued, 9u);
  EXPECT_EQ(audit.manual_corrections, 1u);
  EXPECT_EQ(audit.accepted, 1u);
  EXPECT_EQ(audit.skipped, 1u);
  EXPECT_EQ(audit.events, 4u);
}

TEST_F(ReviewSessionTest, RejectedCorrectionChangesNothing) {
  ReviewSession session(Dir(), {});
  const std::string journal_before =
      std::filesystem::exists(Dir() / "journal.jsonl") ? ReadFile((Dir() / "journal.jsonl").string()) : "";
  const ReviewItem before = session.Get(4);
  EXPECT_THROW(session.Correct(4, {{0, 2, kClaim}, {1, 3, kPremise}}), ReviewRejected);
  EXPECT_THROW(session.Correct(4, {{0, 5, kClaim}}), ReviewRejected);
  EXPECT_THROW(session.Correct(4, {{2, 2, kClaim}}), ReviewRejected);
  const ReviewItem after = session.Get(4);
  EXPECT_EQ(after.target, before.target);
  EXPECT_EQ(after.status, ReviewStatus::kPending);
  EXPECT_TRUE(after.history.empty());
  EXPECT_EQ(session.Audit().events, 0u);
  const std::string journal_after =
      std::filesystem::exists(Dir() / "journal.jsonl") ? ReadFile((Dir() / "journal.jsonl").string()) : "";
  EXPECT_EQ(journal_after, journal_before);
}

TEST_F(ReviewSessionTest, UnsortedSpansAreAccepted) {
  ReviewSession session(Dir(), {});
  const ReviewItem item = session.Correct(4, {{2, 4, kClaim}, {0, 1, kPremise}});
  EXPECT_EQ(item.target.spans(), (Spans{{0, 1, kPremise}, {2, 4, kClaim}}));
}

void RandomEdits(ReviewSession& session, std::mt19937_64& rng, int count) {
  for (int i = 0; i < count; ++i) {
    const std::size_t id = testing::Draw(rng, 10);
    if (testing::Coin(rng, 0.2)) {
      try {
        session.Skip(id);
      } catch (const ReviewConflict&) {
      }
    } else {
      session.Correct(id, testing::RandomSpans(rng, 4));
    }
  }
}

TEST_F(ReviewSessionTest, ReopenReplaysJournal) {
  std::mt19937_64 rng(5);
  Corpus expected;
  ReviewAudit audit;
  {
    ReviewSession session(Dir(), {});
    RandomEdits(session, rng, 60);
    expected = session.CurrentCorpus();
    audit = session.Audit();
  }
  ReviewSession reopened(Dir(), {});
  EXPECT_EQ(reopened.CurrentCorpus(), expected);
  EXPECT_EQ(reopened.Audit().events, audit.events);
  EXPECT_EQ(reopened.Audit().manual_corrections, audit.manual_corrections);
}

TEST_F(ReviewSessionTest, SnapshotsCompactTheJournal) {
  std::mt19937_64 rng(6);
  ReviewQueueConfig config;
  config.snapshot_every = 7;
  Corpus expected;
  std::uint64_t events = 0;
  {
    ReviewSession session(Dir(), config);
    RandomEdits(session, rng, 50);
    expected = session.CurrentCorpus();
    events = session.Audit().events;
  }
  EXPECT_TRUE(std::filesystem::exists(Dir() / "snapshot.json"));
  const auto journal = SplitLines(ReadFile((Dir() / "journal.jsonl").string()));
  EXPECT_LT(journal.size(), 7u);
  ReviewSession reopened(Dir(), config);
  EXPECT_EQ(reopened.CurrentCorpus(), expected);
  EXPECT_EQ(reopened.Audit().events, events);
}

TEST_F(ReviewSessionTest, TornFinalJournalLineIsIgnored) {
  Corpus expected;
  {
    ReviewSession session(Dir(), {});
    session.Correct(1, {{0, 1, kClaim}});
    expected = session.CurrentCorpus();
  }
  {
    std::ofstream journal(Dir() / "journal.jsonl", std::ios::app);
    journal << "{\"sequence\": 2, \"item\": 2, \"act";
  }
  ReviewSession reopened(Dir(), {});
  EXPECT_EQ(reopened.CurrentCorpus(), expected);
  EXPECT_EQ(reopened.Audit().events, 1u);
  // The next event still lands.
  reopened.Correct(2, {{0, 1, kClaim}});
  ReviewSession again(Dir(), {});
  EXPECT_EQ(again.Get(2).target.spans(), (Spans{{0, 1, kClaim}}));
}

TEST_F(ReviewSessionTest, HistoryReplayReproducesSpans) {
  std::mt19937_64 rng(7);
  ReviewSession session(Dir(), {});
  RandomEdits(session, rng, 80);
  for (std::size_t id = 0; id < 10; ++id) {
    const ReviewItem item = session.Get(id);
    EXPECT_EQ(ReplayHistory(item.initial_spans, item.history), item.target.spans());
    for (std::size_t k = 1; k < item.history.size(); ++k) {
      EXPECT_LT(item.history[k - 1].sequence, item.history[k].sequence);
    }
  }
}

TEST_F(ReviewSessionTest, EventJsonRoundTrip) {
  ReviewSession session(Dir(), {});
  const ReviewItem item = session.Correct(5, {{0, 2, kClaim}});
  const ReviewEvent& event = item.history.back();
  const ReviewEvent parsed = ReviewEventFromJson(ToJson(event));
  EXPECT_EQ(parsed.sequence, event.sequence);
  EXPECT_EQ(parsed.spans, event.spans);
  EXPECT_EQ(parsed.prior_spans, event.prior_spans);
  EXPECT_EQ(parsed.time, event.time);
  EXPECT_EQ(ToJson(item)["source"]["tokens"].size(), 3u);
}

TEST_F(ReviewSessionTest, ExportIsStrictlyValidConll) {
  ReviewSession session(Dir(), {});
  session.Correct(1, {{0, 1, kClaim}, {1, 4, kPremise}});
  const ReviewExport exported = session.WriteExport();
  EXPECT_EQ(exported.audit.manual_corrections, 1u);
  const std::string text = ReadFile((Dir() / "export.conll").string());
  EXPECT_EQ(ParseConll(text, IobMode::kStrict).documents, exported.corpus.documents);
  EXPECT_EQ(exported.corpus.documents.size(), 2u);
  EXPECT_TRUE(std::filesystem::exists(Dir() / "audit.json"));
}

TEST_F(ReviewSessionTest, ConcurrentWritersSerialize) {
  ReviewSession session(Dir(), {});
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&session, t] {
      std::mt19937_64 rng(100 + t);
      for (int i = 0; i < 50; ++i) {
        session.Correct(testing::Draw(rng, 10), testing::RandomSpans(rng, 4));
        session.List(std::nullopt, std::nullopt, 1, 5);
      }
    });
  }
  for (auto& thread : threads) thread.join();
  EXPECT_EQ(session.Audit().events, 200u);
  const Corpus live = session.CurrentCorpus();
  ReviewSession reopened(Dir(), {});
  EXPECT_EQ(reopened.CurrentCorpus(), live);
}

}  // namespace
}  // namespace argproj
