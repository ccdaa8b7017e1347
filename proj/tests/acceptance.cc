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


// Acceptance suite. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero if any criterion fails.
//
// Corpus-level checks read public data from the environment:
//   ARGPROJ_ABSTRCT_DIR    train.conll dev.conll neoplasm_test.conll
//                          glaucoma_test.conll mixed_test.conll and the
//                          matching <split>_relations.txt files
//   ARGPROJ_PROJECTED_DIR  train_awesome/{source.conll,target.txt,
//                          alignment.pharaoh}

#include <httplib.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "argproj/cli.h"
#include "argproj/conll.h"
#include "argproj/corpus.h"
#include "argproj/evaluate.h"
#include "argproj/model1.h"
#include "argproj/postprocess.h"
#include "argproj/projection.h"
#include "argproj/relations.h"
#include "argproj/reports.h"
#include "argproj/review_server.h"
#include "argproj/review_session.h"
#include "argproj/text.h"
#include "oracles.h"

namespace argproj {
namespace {

namespace fs = std::filesystem;
using testing::Draw;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome Pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Outcome Fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }
Outcome Skip(std::string detail) { return {Verdict::kSkip, std::move(detail)}; }

class Clock {
 public:
  Clock() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string Fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

std::vector<Token> MakeTokens(const std::vector<std::string>& words) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < words.size(); ++i) tokens.push_back(Token::Make(words[i], i));
  return tokens;
}

SentenceAlignment MakeAlignment(
    std::size_t src_len, std::size_t tgt_len,
    const std::vector<std::pair<std::size_t, std::size_t>>& links) {
  std::vector<AlignmentLink> out;
  for (const auto& [s, t] : links) out.push_back({s, t});
  return SentenceAlignment(src_len, tgt_len, out);
}

// ---------------------------------------------------------------------------

Outcome IobRoundTrip() {
  std::mt19937_64 rng(101);
  Clock clock;
  for (int i = 0; i < 10000; ++i) {
    const AnnotatedSentence s = testing::RandomSentence(rng, 40);
    if (IobToSpans(SpansToIob(s), IobMode::kStrict) != s.spans()) {
      return Fail("mismatch on sentence " + std::to_string(i));
    }
  }
  const double seconds = clock.Seconds();
  if (seconds >= 5.0) return Fail(Fmt("10000 sentences in %.3f s", seconds));
  return Pass(Fmt("10000 sentences in %.3f s", seconds));
}

Outcome ProjectionOracle() {
  std::mt19937_64 rng(202);
  Clock clock;
  const int kCases = 100000;
  for (int i = 0; i < kCases; ++i) {
    const AnnotatedSentence src = testing::RandomSentence(rng, 8);
    const std::size_t tgt_len = 1 + Draw(rng, 8);
    const auto tgt = testing::RandomWords(rng, tgt_len);
    const auto links = testing::RandomLinks(rng, src.size(), tgt_len,
                                            std::uniform_real_distribution<>(0.0, 0.6)(rng));
    ProjectionConfig config;
    config.gap_tolerance = Draw(rng, 5);
    config.include_punctuation = testing::Coin(rng, 0.5);
    const auto expected = testing::OracleProject(src.spans(), tgt, links, config.gap_tolerance,
                                                 config.include_punctuation);
    const ProjectionOutcome got =
        ProjectSentence(src, MakeTokens(tgt), MakeAlignment(src.size(), tgt_len, links), config);
    if (got.sentence.spans() != expected.spans) {
      return Fail("case " + std::to_string(i) + " differs from the reference");
    }
  }
  const double seconds = clock.Seconds();
  if (seconds >= 60.0) return Fail(Fmt("100000 cases in %.2f s", seconds));
  return Pass(Fmt("100000 cases in %.2f s", seconds));
}

Outcome IdentityProjection() {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 10000; ++i) {
    const AnnotatedSentence src = testing::RandomSentence(rng, 30);
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t k = 0; k < src.size(); ++k) links.emplace_back(k, k);
    ProjectionConfig config;
    config.gap_tolerance = Draw(rng, 6);
    config.on_unprojectable =
        testing::Coin(rng, 0.5) ? UnprojectablePolicy::kDrop : UnprojectablePolicy::kError;
    const auto out = ProjectSentence(src, src.tokens(),
                                     MakeAlignment(src.size(), src.size(), links), config);
    if (out.sentence.spans() != src.spans()) {
      return Fail("sentence " + std::to_string(i) + " changed");
    }
  }
  return Pass("10000 sentences");
}

Outcome FullComponentRule() {
  std::mt19937_64 rng(404);
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Corpus source{"s", {{"d", "", {}}}};
    std::string target_text;
    std::string alignment_text;
    for (int i = 0; i < 50; ++i) {
      const AnnotatedSentence s = testing::Coin(rng, 0.5) ? testing::RandomFullComponent(rng, 15)
                                                          : testing::RandomSentence(rng, 15);
      const auto words = testing::RandomWords(rng, 1 + Draw(rng, 15));
      for (const auto& w : words) target_text += w + " ";
      target_text += "\n";
      for (const auto& [a, b] : testing::RandomLinks(rng, s.size(), words.size(), 0.15)) {
        alignment_text += std::to_string(a) + "-" + std::to_string(b) + " ";
      }
      alignment_text += "\n";
      source.documents[0].sentences.push_back(s);
    }
    const ProjectedCorpus projected =
        ProjectCorpusFromText(source, target_text, alignment_text, {});
    const PostprocessResult post = RunPipeline(source, projected.corpus, {});
    const auto src = source.Sentences();
    const auto out = post.corpus.Sentences();
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (ClassifySentence(*src[i]) != SentenceClass::kFullComponent) continue;
      ++checked;
      const std::vector<Span> want = {{0, out[i]->size(), src[i]->spans()[0].label}};
      if (out[i]->spans() != want) {
        return Fail("counterexample at trial " + std::to_string(trial) + ", sentence " +
                    std::to_string(i));
      }
    }
  }
  return Pass(std::to_string(checked) + " full-component sentences, 0 counterexamples");
}

Outcome Idempotence() {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    Corpus source{"s", {{"d", "", {}}}};
    Corpus target{"t", {{"d", "", {}}}};
    const std::size_t n = 1 + Draw(rng, 20);
    for (std::size_t i = 0; i < n; ++i) {
      source.documents[0].sentences.push_back(testing::Coin(rng, 0.3)
                                                  ? testing::RandomFullComponent(rng, 12)
                                                  : testing::RandomSentence(rng, 12));
      target.documents[0].sentences.push_back(testing::RandomSentence(rng, 12));
    }
    RulePipelineConfig config;
    config.include_punctuation = testing::Coin(rng, 0.5);
    const PostprocessResult first = RunPipeline(source, target, config);
    const PostprocessResult second = RunPipeline(source, first.corpus, config);
    if (second.report.total_applications() != 0 || second.corpus != first.corpus) {
      return Fail("corpus " + std::to_string(trial) + ": second pass changed " +
                  std::to_string(second.report.total_applications()) + " sentences");
    }
  }
  return Pass("1000 corpora, second pass 0 changes");
}

Outcome Model1Criterion() {
  std::vector<std::string> problems;
  // Monotonicity and normalization over many runs.
  std::mt19937_64 rng(606);
  double worst_drop = 0.0;
  double worst_norm = 0.0;
  for (int run = 0; run < 50; ++run) {
    std::vector<ParallelSentence> corpus;
    const std::size_t n = 1 + Draw(rng, 200);
    for (std::size_t i = 0; i < n; ++i) {
      corpus.push_back({testing::RandomWords(rng, 1 + Draw(rng, 12)),
                        testing::RandomWords(rng, 1 + Draw(rng, 12))});
    }
    Model1Options options;
    options.iterations = 1 + static_cast<int>(Draw(rng, 20));
    const Model1Result result = TrainModel1(corpus, options);
    for (std::size_t i = 1; i < result.log_likelihood.size(); ++i) {
      worst_drop = std::max(worst_drop,
                            result.log_likelihood[i - 1] - result.log_likelihood[i]);
    }
    worst_norm = std::max(worst_norm, result.table.MaxNormalizationError());
  }
  // The two-pair toy corpus.
  Model1Options options;
  options.iterations = 20;
  const Model1Result toy = TrainModel1(
      std::vector<ParallelSentence>{{{"the", "house"}, {"la", "casa"}},
                                    {{"the", "dog"}, {"el", "perro"}}},
      options);
  for (std::size_t i = 1; i < toy.log_likelihood.size(); ++i) {
    worst_drop = std::max(worst_drop, toy.log_likelihood[i - 1] - toy.log_likelihood[i]);
  }
  worst_norm = std::max(worst_norm, toy.table.MaxNormalizationError());
  const double casa = toy.table.Prob("house", "casa");

  if (worst_drop > 1e-9) problems.push_back(Fmt("log-likelihood drop %.3g", worst_drop));
  if (worst_norm > 1e-9) problems.push_back(Fmt("normalization error %.3g", worst_norm));
  if (!(casa > 0.99)) problems.push_back(Fmt("t(casa|house) = %.6f, want > 0.99", casa));
  const std::string summary = Fmt("t(casa|house) = %.6f", casa) +
                              Fmt(", max LL drop %.3g", worst_drop) +
                              Fmt(", max normalization error %.3g", worst_norm);
  if (problems.empty()) return Pass(summary);
  std::string detail;
  for (const std::string& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  return Fail(detail + " (" + summary + ")");
}

std::string EnvDir(const char* name) {
  const char* value = std::getenv(name);
  return value == nullptr ? "" : value;
}

Outcome CorpusTables() {
  const std::string dir = EnvDir("ARGPROJ_ABSTRCT_DIR");
  const std::vector<std::string> splits = {"train", "dev", "neoplasm_test", "glaucoma_test",
                                           "mixed_test"};
  if (dir.empty()) return Skip("ARGPROJ_ABSTRCT_DIR not set");
  for (const std::string& split : splits) {
    if (!fs::exists(fs::path(dir) / (split + ".conll"))) {
      return Skip(split + ".conll not found in " + dir);
    }
  }
  // Premise, Claim, MajorClaim per split; then Support, Attack, noRel.
  const std::vector<std::array<std::size_t, 3>> components = {
      {1537, 666, 64}, {438, 228, 20}, {218, 99, 9}, {404, 183, 7}, {388, 182, 30}};
  const std::array<std::size_t, 3> total = {2985, 1358, 130};
  const std::vector<std::array<std::size_t, 3>> relations = {
      {1194, 200, 12892}, {185, 30, 1815}, {359, 60, 3961}, {317, 29, 2986}, {296, 24, 3012}};

  std::vector<std::string> args = {"stats"};
  bool have_relations = true;
  for (const std::string& split : splits) {
    args.push_back("--corpus");
    args.push_back(split + "=" + (fs::path(dir) / (split + ".conll")).string());
    const fs::path rel = fs::path(dir) / (split + "_relations.txt");
    if (fs::exists(rel)) {
      args.push_back("--relations");
      args.push_back(split + "=" + rel.string());
    } else {
      have_relations = false;
    }
  }
  std::ostringstream out;
  std::ostringstream err;
  if (RunCli(args, out, err) != kExitOk) return Fail("stats failed: " + err.str());
  const Json json = Json::parse(out.str());
  std::vector<std::string> diffs;
  auto check = [&](const Json& row, const char* key, std::size_t want, const std::string& where) {
    const std::size_t got = row.at(key).get<std::size_t>();
    if (got != want) {
      diffs.push_back(where + " " + key + " " + std::to_string(got) + " != " +
                      std::to_string(want));
    }
  };
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const Json& row = json["components"][splits[i]];
    check(row, "Premise", components[i][0], splits[i]);
    check(row, "Claim", components[i][1], splits[i]);
    check(row, "MajorClaim", components[i][2], splits[i]);
    if (have_relations) {
      const Json& rel = json["relations"][splits[i]];
      check(rel, "Support", relations[i][0], splits[i]);
      check(rel, "Attack", relations[i][1], splits[i]);
      check(rel, "noRel", relations[i][2], splits[i]);
    }
  }
  check(json["components"]["Total"], "Premise", total[0], "Total");
  check(json["components"]["Total"], "Claim", total[1], "Total");
  check(json["components"]["Total"], "MajorClaim", total[2], "Total");
  if (!diffs.empty()) {
    std::string detail;
    for (const std::string& d : diffs) detail += (detail.empty() ? "" : "; ") + d;
    return Fail(detail);
  }
  return Pass(have_relations ? "components and relations exact"
                             : "components exact; relation files absent");
}

Outcome ProjectedTable() {
  const std::string dir = EnvDir("ARGPROJ_PROJECTED_DIR");
  if (dir.empty()) return Skip("ARGPROJ_PROJECTED_DIR not set");
  const fs::path split = fs::path(dir) / "train_awesome";
  for (const char* name : {"source.conll", "target.txt", "alignment.pharaoh"}) {
    if (!fs::exists(split / name)) return Skip(std::string(name) + " not found in " + split.string());
  }
  testing::TempDir work("table3");
  std::ostringstream out;
  std::ostringstream err;
  const std::vector<std::vector<std::string>> steps = {
      {"project", "--src", (split / "source.conll").string(), "--tgt",
       (split / "target.txt").string(), "--align", (split / "alignment.pharaoh").string(),
       "--out", work.File("p.conll"), "--report", work.File("r.json")},
      {"postprocess", "--src", (split / "source.conll").string(), "--tgt",
       work.File("p.conll"), "--out", work.File("pp.conll"), "--report", work.File("r.json")}};
  for (const auto& step : steps) {
    if (RunCli(step, out, err) != kExitOk) return Fail(step[0] + " failed: " + err.str());
  }
  const Json report = Json::parse(ReadFile(work.File("r.json")));
  const std::size_t overall = report["overall"];
  const std::size_t full_o = report["full_O"];
  const std::size_t full_component = report["full_component"];
  const std::string detail =
      "overall " + std::to_string(overall) + ", full_O " + std::to_string(full_o) +
      ", full_component " + std::to_string(full_component) + ", auto-corrections " +
      report["auto_corrections"]["total_applications"].dump();
  if (overall == 4405 && full_o == 2345 && full_component == 1752) return Pass(detail);
  return Fail(detail + " (want 4405, 2345, 1752)");
}

Outcome EvaluationOracle() {
  auto one = [](std::size_t n, std::vector<Span> spans) {
    return Corpus{"c", {{"d", "", {AnnotatedSentence::FromWords(
                                      std::vector<std::string>(n, "w"), std::move(spans))}}}};
  };
  const EvalReport token = ScoreComponents(one(4, {{0, 2, ComponentLabel::kClaim}}),
                                           one(4, {{0, 3, ComponentLabel::kClaim}}),
                                           EvalMode::kToken);
  if (std::abs(token.claim.precision - 2.0 / 3.0) > 1e-12 ||
      std::abs(token.claim.recall - 1.0) > 1e-12 || std::abs(token.claim.f1 - 0.8) > 1e-12) {
    return Fail("token example: P=" + std::to_string(token.claim.precision) +
                " R=" + std::to_string(token.claim.recall) + " F1=" +
                std::to_string(token.claim.f1));
  }
  const RelationScores rel = ScoreRelations(
      std::vector<RelationInstance>{{RelationLabel::kSupport, "a", "b"},
                                    {RelationLabel::kNoRel, "c", "d"}},
      std::vector<RelationLabel>{RelationLabel::kNoRel, RelationLabel::kNoRel});
  if (std::abs(rel.macro_f1 - 1.0 / 3.0) > 1e-12) {
    return Fail("relation example: macro " + std::to_string(rel.macro_f1));
  }
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<AnnotatedSentence> gold;
    std::vector<AnnotatedSentence> pred;
    const std::size_t n = 1 + Draw(rng, 10);
    for (std::size_t i = 0; i < n; ++i) {
      gold.push_back(testing::RandomSentence(rng, 12));
      pred.push_back(gold.back().WithSpans(testing::RandomSpans(rng, gold.back().size())));
    }
    for (EvalMode mode : {EvalMode::kToken, EvalMode::kSpan}) {
      const EvalReport r =
          ScoreComponents(Corpus{"g", {{"d", "", gold}}}, Corpus{"p", {{"d", "", pred}}}, mode);
      if (r.headline_f1 != (r.claim.f1 + r.premise.f1) / 2.0) {
        return Fail("headline differs from (F1-C + F1-P) / 2 at trial " + std::to_string(trial));
      }
    }
  }
  return Pass("worked examples within 1e-12; headline exact on 2000 random inputs");
}

struct PerfFiles {
  std::string src;
  std::string tgt;
  std::string align;
};

PerfFiles WritePerfCorpus(const testing::TempDir& dir, std::size_t pairs) {
  std::mt19937_64 rng(808);
  Corpus source{"perf", {}};
  std::string target;
  std::string alignment;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (i % 10 == 0) source.documents.push_back({"doc" + std::to_string(i / 10), "", {}});
    const AnnotatedSentence s = testing::Coin(rng, 0.4) ? testing::RandomFullComponent(rng, 40)
                                                        : testing::RandomSentence(rng, 40);
    const std::size_t m = std::max<std::size_t>(1, s.size() + Draw(rng, 7)) - std::min<std::size_t>(3, s.size() - 1);
    const auto words = testing::RandomWords(rng, m);
    for (std::size_t k = 0; k < m; ++k) target += (k ? " " : "") + words[k];
    target += "\n";
    // Mostly diagonal links with some noise.
    std::string line;
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (testing::Coin(rng, 0.15)) continue;
      const std::size_t b = std::min(m - 1, a * m / s.size() + Draw(rng, 2));
      line += (line.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    }
    alignment += line + "\n";
    source.documents.back().sentences.push_back(s);
  }
  PerfFiles files{dir.File("src.conll"), dir.File("tgt.txt"), dir.File("align.pharaoh")};
  WriteConllFile(files.src, source);
  WriteFile(files.tgt, target);
  WriteFile(files.align, alignment);
  return files;
}

Outcome Performance() {
  testing::TempDir dir("perf");
  const PerfFiles files = WritePerfCorpus(dir, 10000);
  auto run = [&](const std::string& jobs, const std::string& tag, double* seconds) {
    std::ostringstream out;
    std::ostringstream err;
    Clock clock;
    const int a = RunCli({"project", "--src", files.src, "--tgt", files.tgt, "--align",
                          files.align, "--out", dir.File(tag + "p.conll"), "--report",
                          dir.File(tag + "r.json"), "--jobs", jobs},
                         out, err);
    const int b = RunCli({"postprocess", "--src", files.src, "--tgt", dir.File(tag + "p.conll"),
                          "--out", dir.File(tag + "pp.conll"), "--report",
                          dir.File(tag + "r.json"), "--jobs", jobs},
                         out, err);
    if (seconds != nullptr) *seconds = clock.Seconds();
    if (a != kExitOk || b != kExitOk) return std::string("error: ") + err.str();
    return ReadFile(dir.File(tag + "p.conll")) + ReadFile(dir.File(tag + "pp.conll")) +
           ReadFile(dir.File(tag + "r.json"));
  };
  double single = 0.0;
  const std::string one = run("1", "one_", &single);
  if (one.rfind("error: ", 0) == 0) return Fail(one);
  const std::string two = run("2", "two_", nullptr);
  const std::string four = run("4", "four_", nullptr);
  const std::string detail = Fmt("10000 pairs in %.3f s single-threaded", single);
  if (single >= 5.0) return Fail(detail);
  if (two != one || four != one) return Fail(detail + "; --jobs output differs");
  return Pass(detail + "; --jobs 2 and 4 byte-identical");
}

// Review server over HTTP.

class LiveServer {
 public:
  explicit LiveServer(const fs::path& dir)
      : session_(dir, {}), server_(session_, {}) {
    port_ = server_.Bind(0);
    thread_ = std::thread([this] { server_.Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    for (int i = 0; i < 300 && !client_->Get("/items"); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
  }
  ~LiveServer() {
    server_.Stop();
    thread_.join();
  }
  httplib::Client& client() { return *client_; }

 private:
  ReviewSession session_;
  ReviewServer server_;
  int port_ = -1;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

std::vector<Span> SpansOf(const Json& array) {
  std::vector<Span> spans;
  for (const Json& span : array) spans.push_back(SpanFromJson(span));
  return spans;
}

Json SpansJson(const std::vector<Span>& spans) {
  Json array = Json::array();
  for (const Span& span : spans) array.push_back(ToJson(span));
  return array;
}

Outcome ReviewServerCriterion() {
  testing::TempDir dir("review");
  std::mt19937_64 rng(909);
  Corpus source{"en", {{"d", "", {}}}};
  Corpus target{"es", {{"d", "", {}}}};
  for (int i = 0; i < 30; ++i) {
    source.documents[0].sentences.push_back(i % 5 == 0 ? testing::RandomFullComponent(rng, 8)
                                                       : testing::RandomSentence(rng, 8));
    target.documents[0].sentences.push_back(testing::RandomSentence(rng, 8));
  }
  const fs::path session_dir = dir.path() / "session";
  ReviewSession::Create(session_dir, source, target);
  std::vector<std::size_t> sizes;
  for (const AnnotatedSentence* s : target.Sentences()) sizes.push_back(s->size());

  Json before_restart;
  std::string notes;
  {
    LiveServer server(session_dir);
    // Write-read consistency.
    for (int i = 0; i < 100; ++i) {
      const std::size_t id = Draw(rng, sizes.size());
      const std::string path = "/items/" + std::to_string(id);
      const std::vector<Span> spans = testing::RandomSpans(rng, sizes[id]);
      auto post = server.client().Post(path + "/correction", SpansJson(spans).dump(),
                                       "application/json");
      if (!post || post->status != 200) return Fail("correction request failed");
      auto get = server.client().Get(path);
      if (!get || get->status != 200) return Fail("read-back request failed");
      const Json item = Json::parse(get->body);
      if (SpansOf(item["spans"]) != spans) return Fail("read-back differs for item " + path);
    }
    notes += "100 write-read pairs consistent";
    // 422 atomicity.
    const std::string journal = ReadFile((session_dir / "journal.jsonl").string());
    for (int i = 0; i < 50; ++i) {
      const std::size_t id = Draw(rng, sizes.size());
      const std::string path = "/items/" + std::to_string(id);
      const std::string before = server.client().Get(path)->body;
      Json bad = Json::array();
      switch (i % 4) {
        case 0:
          bad = Json::array({{{"start", 0}, {"end", sizes[id] + 1}, {"label", "Claim"}}});
          break;
        case 1:
          bad = Json::array({{{"start", 0}, {"end", 1}, {"label", "Claim"}},
                             {{"start", 0}, {"end", 1}, {"label", "Premise"}}});
          break;
        case 2:
          bad = Json::array({{{"start", 0}, {"end", 0}, {"label", "Claim"}}});
          break;
        default:
          bad = Json::array({{{"start", 0}, {"end", 1}, {"label", "Warrant"}}});
      }
      auto res = server.client().Post(path + "/correction", bad.dump(), "application/json");
      if (!res || res->status != 422) return Fail("invalid correction not rejected with 422");
      if (server.client().Get(path)->body != before) return Fail("rejected correction changed " + path);
    }
    if (ReadFile((session_dir / "journal.jsonl").string()) != journal) {
      return Fail("rejected corrections reached the journal");
    }
    notes += "; 50 rejections atomic";
    before_restart = Json::parse(server.client().Get("/items?page_size=500")->body);
  }
  // History replay after a restart.
  LiveServer server(session_dir);
  const Json after = Json::parse(server.client().Get("/items?page_size=500")->body);
  if (after != before_restart) return Fail("state differs after restart");
  for (const Json& item : after["items"]) {
    std::vector<Span> spans = SpansOf(item["initial_spans"]);
    for (const Json& event : item["history"]) {
      if (event["action"] != "skip") spans = SpansOf(event["spans"]);
    }
    if (spans != SpansOf(item["spans"])) {
      return Fail("history of item " + item["id"].dump() + " does not replay");
    }
  }
  const Json exported = Json::parse(server.client().Get("/export")->body);
  try {
    ParseConll(exported["conll"].get<std::string>(), IobMode::kStrict);
  } catch (const std::exception& e) {
    return Fail(std::string("export is not valid CoNLL: ") + e.what());
  }
  return Pass(notes + "; history replays after restart");
}

}  // namespace
}  // namespace argproj

int main() {
  using argproj::Outcome;
  using argproj::Verdict;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"iob-round-trip", argproj::IobRoundTrip},
      {"projection-oracle-equivalence", argproj::ProjectionOracle},
      {"identity-projection", argproj::IdentityProjection},
      {"full-component-rule", argproj::FullComponentRule},
      {"postprocess-idempotence", argproj::Idempotence},
      {"model1-em", argproj::Model1Criterion},
      {"corpus-statistics-tables", argproj::CorpusTables},
      {"projected-corpus-categories", argproj::ProjectedTable},
      {"evaluation-hand-oracle", argproj::EvaluationOracle},
      {"performance", argproj::Performance},
      {"review-server-http", argproj::ReviewServerCriterion},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = argproj::Fail(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.verdict == Verdict::kPass   ? "PASS"
                      : outcome.verdict == Verdict::kFail ? "FAIL"
                                                          : "SKIP";
    failures += outcome.verdict == Verdict::kFail;
    std::printf("%s %s: %s\n", tag, name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
