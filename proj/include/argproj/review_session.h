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

// Manual review of projected sentences. A session directory holds:
//
//   source.conll    source-language reference corpus (read-only)
//   initial.conll   target corpus as loaded, before any review
//   snapshot.json   state as of event `sequence` (optional)
//   journal.jsonl   one correction event per line, appended and fsynced
//                   before a request returns
//
// The current state is the snapshot (or initial.conll) with every later
// journal event replayed on top.

#ifndef ARGPROJ_REVIEW_SESSION_H_
#define ARGPROJ_REVIEW_SESSION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "argproj/corpus.h"
#include "argproj/error.h"
#include "argproj/projection.h"
#include "argproj/reports.h"

namespace argproj {

enum class ReviewStatus { kPending, kAccepted, kEdited, kSkipped };

std::string_view ToString(ReviewStatus status);
std::optional<ReviewStatus> ParseReviewStatus(std::string_view text);

enum class ReviewAction { kEdit, kAccept, kSkip };

std::string_view ToString(ReviewAction action);

struct ReviewEvent {
  std::uint64_t sequence = 0;
  std::size_t item = 0;
  ReviewAction action = ReviewAction::kAccept;
  std::string time;  // UTC, ISO 8601
  std::vector<Span> prior_spans;
  std::vector<Span> spans;
};

Json ToJson(const ReviewEvent& event);
ReviewEvent ReviewEventFromJson(const Json& json);

struct ReviewItem {
  std::size_t id = 0;
  std::string document;
  std::size_t sentence = 0;  // index within the document
  SentenceClass outcome = SentenceClass::kFullO;  // of the source sentence
  ReviewStatus status = ReviewStatus::kPending;
  std::vector<Span> initial_spans;
  AnnotatedSentence target;
  const AnnotatedSentence* source = nullptr;
  std::vector<ReviewEvent> history;
};

Json ToJson(const ReviewItem& item);

// Replays the span changes of `history` over `initial`.
std::vector<Span> ReplayHistory(std::vector<Span> initial,
                                const std::vector<ReviewEvent>& history);

struct ReviewQueueConfig {
  // Leave source full-component sentences out of the queue.
  bool skip_full_components = true;
  // Restrict the queue to these source classes; empty means all.
  std::vector<SentenceClass> classes;
  // Snapshot and compact the journal after this many events; 0 never.
  std::size_t snapshot_every = 100;
};

// Rejected submissions; the session is left unchanged.
class ReviewNotFound : public Error {
 public:
  using Error::Error;
};
class ReviewRejected : public Error {
 public:
  using Error::Error;
};
class ReviewConflict : public Error {
 public:
  using Error::Error;
};

struct ReviewPage {
  std::vector<ReviewItem> items;
  std::size_t total = 0;
  std::size_t page = 1;
  std::size_t page_size = 20;
};

struct ReviewAudit {
  std::size_t items = 0;
  std::size_t queued = 0;
  std::size_t manual_corrections = 0;  // items with status edited
  std::size_t accepted = 0;
  std::size_t skipped = 0;
  std::size_t pending = 0;
  std::uint64_t events = 0;
};

Json ToJson(const ReviewAudit& audit);

struct ReviewExport {
  Corpus corpus;
  ReviewAudit audit;
};

// Thread-safe: reads run concurrently, writes are serialized.
class ReviewSession {
 public:
  // Writes source.conll and initial.conll into a fresh directory. Throws
  // Error if the directory already holds a session, MismatchError if the
  // corpora differ in sentence count.
  static void Create(const std::filesystem::path& dir, const Corpus& source,
                     const Corpus& target);
  static bool Exists(const std::filesystem::path& dir);

  ReviewSession(std::filesystem::path dir, ReviewQueueConfig config);

  ReviewSession(const ReviewSession&) = delete;
  ReviewSession& operator=(const ReviewSession&) = delete;

  const ReviewQueueConfig& config() const { return config_; }

  // `page` is 1-based. A page past the end is empty.
  ReviewPage List(std::optional<ReviewStatus> status,
                  std::optional<SentenceClass> outcome, std::size_t page,
                  std::size_t page_size) const;

  // Throws ReviewNotFound.
  ReviewItem Get(std::size_t id) const;

  // Replaces the item's spans. Identical spans count as an accept. Throws
  // ReviewNotFound, ReviewRejected (invalid spans).
  ReviewItem Correct(std::size_t id, std::vector<Span> spans);

  // Marks a pending item as skipped. Throws ReviewNotFound, ReviewConflict.
  ReviewItem Skip(std::size_t id);

  Corpus CurrentCorpus() const;
  ReviewAudit Audit() const;
  // Corpus and audit of the same state.
  ReviewExport Export() const;

  // Export() plus export.conll and audit.json in the session directory.
  ReviewExport WriteExport() const;

  // Forces a snapshot and empties the journal.
  void Snapshot();

 private:
  bool InQueue(const ReviewItem& item) const;
  void Load();
  void Apply(const ReviewEvent& event);
  void Record(ReviewEvent event);
  void SnapshotLocked();
  Corpus CurrentCorpusLocked() const;
  ReviewAudit AuditLocked() const;

  std::filesystem::path dir_;
  ReviewQueueConfig config_;
  Corpus source_;
  Corpus initial_;
  std::vector<ReviewItem> items_;
  std::uint64_t sequence_ = 0;
  std::size_t events_since_snapshot_ = 0;
  mutable std::shared_mutex mutex_;
  // Serializes writers of the export files.
  mutable std::mutex export_mutex_;
};

}  // namespace argproj

#endif  // ARGPROJ_REVIEW_SESSION_H_
