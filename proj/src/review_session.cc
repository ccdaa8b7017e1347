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

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <mutex>

#include "argproj/conll.h"
#include "argproj/text.h"

namespace argproj {
namespace fs = std::filesystem;

namespace {

constexpr char kSourceFile[] = "source.conll";
constexpr char kInitialFile[] = "initial.conll";
constexpr char kSnapshotFile[] = "snapshot.json";
constexpr char kJournalFile[] = "journal.jsonl";

std::string UtcNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch())
                          .count() %
                      1000;
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buffer[40];
  const std::size_t n = std::strftime(buffer, sizeof(buffer), "%FT%T", &tm);
  std::snprintf(buffer + n, sizeof(buffer) - n, ".%03dZ",
                static_cast<int>(millis));
  return buffer;
}

// Appends `line` and a newline, then fsyncs.
void AppendDurably(const fs::path& path, const std::string& line) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw Error("cannot open " + path.string());
  const std::string data = line + "\n";
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      ::close(fd);
      throw Error("write to " + path.string() + " failed");
    }
    written += static_cast<std::size_t>(n);
  }
  const bool synced = ::fsync(fd) == 0;
  ::close(fd);
  if (!synced) throw Error("fsync of " + path.string() + " failed");
}

void WriteDurably(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  WriteFile(tmp.string(), contents);
  const int fd = ::open(tmp.c_str(), O_RDONLY);
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
  fs::rename(tmp, path);
}

Json SpansToJson(const std::vector<Span>& spans) {
  Json out = Json::array();
  for (const Span& span : spans) out.push_back(ToJson(span));
  return out;
}

std::vector<Span> SpansFromJson(const Json& json) {
  if (!json.is_array()) throw ValidationError("spans must be an array");
  std::vector<Span> spans;
  for (const Json& item : json) spans.push_back(SpanFromJson(item));
  return spans;
}

Json SentenceToJson(const AnnotatedSentence& sentence,
                    const std::vector<Span>& spans) {
  Json tokens = Json::array();
  for (const Token& token : sentence.tokens()) tokens.push_back(token.text);
  return {{"tokens", tokens}, {"spans", SpansToJson(spans)}};
}

}  // namespace

std::string_view ToString(ReviewStatus status) {
  switch (status) {
    case ReviewStatus::kPending:
      return "pending";
    case ReviewStatus::kAccepted:
      return "accepted";
    case ReviewStatus::kEdited:
      return "edited";
    case ReviewStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

std::optional<ReviewStatus> ParseReviewStatus(std::string_view text) {
  for (ReviewStatus status :
       {ReviewStatus::kPending, ReviewStatus::kAccepted, ReviewStatus::kEdited,
        ReviewStatus::kSkipped}) {
    if (ToString(status) == text) return status;
  }
  return std::nullopt;
}

std::string_view ToString(ReviewAction action) {
  switch (action) {
    case ReviewAction::kEdit:
      return "edit";
    case ReviewAction::kAccept:
      return "accept";
    case ReviewAction::kSkip:
      return "skip";
  }
  return "?";
}

Json ToJson(const ReviewEvent& event) {
  return {{"sequence", event.sequence},
          {"item", event.item},
          {"action", std::string(ToString(event.action))},
          {"time", event.time},
          {"prior_spans", SpansToJson(event.prior_spans)},
          {"spans", SpansToJson(event.spans)}};
}

ReviewEvent ReviewEventFromJson(const Json& json) {
  ReviewEvent event;
  try {
    event.sequence = json.at("sequence").get<std::uint64_t>();
    event.item = json.at("item").get<std::size_t>();
    const std::string action = json.at("action").get<std::string>();
    if (action == "edit") {
      event.action = ReviewAction::kEdit;
    } else if (action == "accept") {
      event.action = ReviewAction::kAccept;
    } else if (action == "skip") {
      event.action = ReviewAction::kSkip;
    } else {
      throw ValidationError("unknown action '" + action + "'");
    }
    event.time = json.at("time").get<std::string>();
    event.prior_spans = SpansFromJson(json.at("prior_spans"));
    event.spans = SpansFromJson(json.at("spans"));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed review event: ") + e.what());
  }
  return event;
}

Json ToJson(const ReviewItem& item) {
  Json history = Json::array();
  for (const ReviewEvent& event : item.history) history.push_back(ToJson(event));
  Json out = SentenceToJson(item.target, item.target.spans());
  Json json;
  json["id"] = item.id;
  json["document"] = item.document;
  json["sentence"] = item.sentence;
  json["class"] = std::string(ToString(item.outcome));
  json["status"] = std::string(ToString(item.status));
  json["tokens"] = out["tokens"];
  json["spans"] = out["spans"];
  json["initial_spans"] = SpansToJson(item.initial_spans);
  if (item.source != nullptr) {
    json["source"] = SentenceToJson(*item.source, item.source->spans());
  }
  json["history"] = history;
  return json;
}

std::vector<Span> ReplayHistory(std::vector<Span> initial,
                                const std::vector<ReviewEvent>& history) {
  for (const ReviewEvent& event : history) {
    if (event.action != ReviewAction::kSkip) initial = event.spans;
  }
  return initial;
}

Json ToJson(const ReviewAudit& audit) {
  return {{"items", audit.items},
          {"queued", audit.queued},
          {"manual_corrections", audit.manual_corrections},
          {"accepted", audit.accepted},
          {"skipped", audit.skipped},
          {"pending", audit.pending},
          {"events", audit.events}};
}

bool ReviewSession::Exists(const fs::path& dir) {
  return fs::exists(dir / kSourceFile) && fs::exists(dir / kInitialFile);
}

void ReviewSession::Create(const fs::path& dir, const Corpus& source,
                           const Corpus& target) {
  if (Exists(dir)) throw Error(dir.string() + " already holds a session");
  const auto sources = source.Sentences();
  const auto targets = target.Sentences();
  if (sources.size() != targets.size()) {
    throw MismatchError("source has " + std::to_string(sources.size()) +
                        " sentences, target has " +
                        std::to_string(targets.size()));
  }
  fs::create_directories(dir);
  WriteDurably(dir / kSourceFile, SerializeConll(source));
  WriteDurably(dir / kInitialFile, SerializeConll(target));
}

ReviewSession::ReviewSession(fs::path dir, ReviewQueueConfig config)
    : dir_(std::move(dir)), config_(std::move(config)) {
  Load();
}

void ReviewSession::Load() {
  if (!Exists(dir_)) throw Error(dir_.string() + " holds no review session");
  source_ = ReadConllFile((dir_ / kSourceFile).string(), IobMode::kStrict);
  initial_ = ReadConllFile((dir_ / kInitialFile).string(), IobMode::kStrict);
  const auto sources = source_.Sentences();
  if (sources.size() != initial_.SentenceCount()) {
    throw MismatchError("session source and target differ in sentence count");
  }
  std::size_t id = 0;
  for (const Document& document : initial_.documents) {
    for (std::size_t s = 0; s < document.sentences.size(); ++s, ++id) {
      ReviewItem item{.id = id,
                      .document = document.id,
                      .sentence = s,
                      .outcome = ClassifySentence(*sources[id]),
                      .status = ReviewStatus::kPending,
                      .initial_spans = document.sentences[s].spans(),
                      .target = document.sentences[s],
                      .source = sources[id],
                      .history = {}};
      items_.push_back(std::move(item));
    }
  }

  if (fs::exists(dir_ / kSnapshotFile)) {
    const Json snapshot = Json::parse(ReadFile((dir_ / kSnapshotFile).string()));
    sequence_ = snapshot.at("sequence").get<std::uint64_t>();
    for (const Json& entry : snapshot.at("items")) {
      const std::size_t item_id = entry.at("id").get<std::size_t>();
      if (item_id >= items_.size()) throw ValidationError("bad snapshot item");
      ReviewItem& item = items_[item_id];
      item.target = item.target.WithSpans(SpansFromJson(entry.at("spans")));
      item.status =
          ParseReviewStatus(entry.at("status").get<std::string>()).value();
      for (const Json& event : entry.at("history")) {
        item.history.push_back(ReviewEventFromJson(event));
      }
    }
  }

  if (fs::exists(dir_ / kJournalFile)) {
    const std::string journal = ReadFile((dir_ / kJournalFile).string());
    const auto lines = SplitLines(journal);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      Json json;
      try {
        json = Json::parse(lines[i]);
      } catch (const Json::exception&) {
        // A torn final line from a crash mid-append; it was never
        // acknowledged. Cut it so the next append starts a fresh line.
        if (i + 1 == lines.size() && !journal.ends_with('\n')) {
          fs::resize_file(dir_ / kJournalFile, journal.size() - lines[i].size());
          break;
        }
        throw ParseError("malformed journal entry", i + 1);
      }
      ReviewEvent event = ReviewEventFromJson(json);
      if (event.sequence <= sequence_) continue;  // already in the snapshot
      if (event.item >= items_.size()) {
        throw ParseError("journal refers to unknown item", i + 1);
      }
      Apply(event);
      ++events_since_snapshot_;
    }
  }
}

void ReviewSession::Apply(const ReviewEvent& event) {
  ReviewItem& item = items_[event.item];
  switch (event.action) {
    case ReviewAction::kEdit:
      item.target = item.target.WithSpans(event.spans);
      item.status = ReviewStatus::kEdited;
      break;
    case ReviewAction::kAccept:
      if (item.status != ReviewStatus::kEdited) {
        item.status = ReviewStatus::kAccepted;
      }
      break;
    case ReviewAction::kSkip:
      item.status = ReviewStatus::kSkipped;
      break;
  }
  item.history.push_back(event);
  sequence_ = std::max(sequence_, event.sequence);
}

void ReviewSession::Record(ReviewEvent event) {
  event.sequence = sequence_ + 1;
  event.time = UtcNow();
  AppendDurably(dir_ / kJournalFile, ToJson(event).dump());
  Apply(event);
  if (config_.snapshot_every > 0 &&
      ++events_since_snapshot_ >= config_.snapshot_every) {
    SnapshotLocked();
  }
}

bool ReviewSession::InQueue(const ReviewItem& item) const {
  if (config_.skip_full_components &&
      item.outcome == SentenceClass::kFullComponent) {
    return false;
  }
  return config_.classes.empty() ||
         std::find(config_.classes.begin(), config_.classes.end(),
                   item.outcome) != config_.classes.end();
}

ReviewPage ReviewSession::List(std::optional<ReviewStatus> status,
                               std::optional<SentenceClass> outcome,
                               std::size_t page, std::size_t page_size) const {
  std::shared_lock lock(mutex_);
  ReviewPage result;
  result.page = page;
  result.page_size = page_size;
  const std::size_t first = (page - 1) * page_size;
  for (const ReviewItem& item : items_) {
    if (!InQueue(item)) continue;
    if (status && item.status != *status) continue;
    if (outcome && item.outcome != *outcome) continue;
    if (result.total >= first && result.items.size() < page_size) {
      result.items.push_back(item);
    }
    ++result.total;
  }
  return result;
}

ReviewItem ReviewSession::Get(std::size_t id) const {
  std::shared_lock lock(mutex_);
  if (id >= items_.size()) {
    throw ReviewNotFound("no item " + std::to_string(id));
  }
  return items_[id];
}

ReviewItem ReviewSession::Correct(std::size_t id, std::vector<Span> spans) {
  std::unique_lock lock(mutex_);
  if (id >= items_.size()) {
    throw ReviewNotFound("no item " + std::to_string(id));
  }
  ReviewItem& item = items_[id];
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.start < b.start || (a.start == b.start && a.end < b.end);
  });
  try {
    ValidateSpans(spans, item.target.size());
  } catch (const ValidationError& e) {
    throw ReviewRejected(e.what());
  }
  ReviewEvent event;
  event.item = id;
  event.prior_spans = item.target.spans();
  event.action = spans == item.target.spans() ? ReviewAction::kAccept
                                              : ReviewAction::kEdit;
  event.spans = std::move(spans);
  Record(std::move(event));
  return items_[id];
}

ReviewItem ReviewSession::Skip(std::size_t id) {
  std::unique_lock lock(mutex_);
  if (id >= items_.size()) {
    throw ReviewNotFound("no item " + std::to_string(id));
  }
  ReviewItem& item = items_[id];
  if (item.status != ReviewStatus::kPending) {
    throw ReviewConflict("item " + std::to_string(id) + " is already " +
                         std::string(ToString(item.status)));
  }
  ReviewEvent event;
  event.item = id;
  event.action = ReviewAction::kSkip;
  event.prior_spans = item.target.spans();
  event.spans = item.target.spans();
  Record(std::move(event));
  return items_[id];
}

Corpus ReviewSession::CurrentCorpus() const {
  std::shared_lock lock(mutex_);
  return CurrentCorpusLocked();
}

ReviewAudit ReviewSession::Audit() const {
  std::shared_lock lock(mutex_);
  return AuditLocked();
}

ReviewExport ReviewSession::Export() const {
  std::shared_lock lock(mutex_);
  return {CurrentCorpusLocked(), AuditLocked()};
}

Corpus ReviewSession::CurrentCorpusLocked() const {
  std::vector<AnnotatedSentence> sentences;
  sentences.reserve(items_.size());
  for (const ReviewItem& item : items_) sentences.push_back(item.target);
  return Reshape(initial_, std::move(sentences));
}

ReviewAudit ReviewSession::AuditLocked() const {
  ReviewAudit audit;
  audit.items = items_.size();
  audit.events = sequence_;
  for (const ReviewItem& item : items_) {
    if (InQueue(item)) ++audit.queued;
    switch (item.status) {
      case ReviewStatus::kPending:
        ++audit.pending;
        break;
      case ReviewStatus::kAccepted:
        ++audit.accepted;
        break;
      case ReviewStatus::kEdited:
        ++audit.manual_corrections;
        break;
      case ReviewStatus::kSkipped:
        ++audit.skipped;
        break;
    }
  }
  return audit;
}

ReviewExport ReviewSession::WriteExport() const {
  ReviewExport result = Export();
  std::unique_lock lock(export_mutex_);
  WriteDurably(dir_ / "export.conll", SerializeConll(result.corpus));
  WriteDurably(dir_ / "audit.json", ToJson(result.audit).dump(2) + "\n");
  return result;
}

void ReviewSession::Snapshot() {
  std::unique_lock lock(mutex_);
  SnapshotLocked();
}

void ReviewSession::SnapshotLocked() {
  Json items = Json::array();
  for (const ReviewItem& item : items_) {
    if (item.history.empty()) continue;
    Json history = Json::array();
    for (const ReviewEvent& event : item.history) {
      history.push_back(ToJson(event));
    }
    items.push_back({{"id", item.id},
                     {"status", std::string(ToString(item.status))},
                     {"spans", SpansToJson(item.target.spans())},
                     {"history", history}});
  }
  const Json snapshot = {{"sequence", sequence_}, {"items", items}};
  WriteDurably(dir_ / kSnapshotFile, snapshot.dump() + "\n");
  // Events up to `sequence_` are now in the snapshot; a crash before this
  // truncation only leaves entries that Load() skips.
  if (fs::exists(dir_ / kJournalFile)) fs::resize_file(dir_ / kJournalFile, 0);
  events_since_snapshot_ = 0;
}

}  // namespace argproj
