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

#include "argproj/model1.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "argproj/error.h"
#include "argproj/text.h"

namespace argproj {

std::vector<ParallelSentence> ReadParallelText(const std::string& source_path,
                                               const std::string& target_path) {
  const std::string source_text = ReadFile(source_path);
  const std::string target_text = ReadFile(target_path);
  const auto source_lines = SplitLines(source_text);
  const auto target_lines = SplitLines(target_text);
  if (source_lines.size() != target_lines.size()) {
    throw MismatchError(source_path + " has " +
                        std::to_string(source_lines.size()) + " lines but " +
                        target_path + " has " +
                        std::to_string(target_lines.size()));
  }
  std::vector<ParallelSentence> corpus(source_lines.size());
  for (std::size_t i = 0; i < source_lines.size(); ++i) {
    corpus[i].source = SplitTokens(source_lines[i]);
    corpus[i].target = SplitTokens(target_lines[i]);
  }
  return corpus;
}

TranslationTable::TranslationTable(bool lowercase) : lowercase_(lowercase) {
  InternSource(kNullWord);
}

std::string TranslationTable::Normalize(std::string_view word) const {
  return lowercase_ ? CaseFold(word) : std::string(word);
}

std::uint32_t TranslationTable::InternSource(std::string_view word) {
  auto [it, inserted] = source_ids_.emplace(
      std::string(word), static_cast<std::uint32_t>(source_words_.size()));
  if (inserted) source_words_.emplace_back(word);
  return it->second;
}

std::uint32_t TranslationTable::InternTarget(std::string_view word) {
  auto [it, inserted] = target_ids_.emplace(
      std::string(word), static_cast<std::uint32_t>(target_words_.size()));
  if (inserted) target_words_.emplace_back(word);
  return it->second;
}

std::uint32_t TranslationTable::SourceId(std::string_view word) const {
  auto it = source_ids_.find(std::string(word));
  return it == source_ids_.end() ? kUnknown : it->second;
}

std::uint32_t TranslationTable::TargetId(std::string_view word) const {
  auto it = target_ids_.find(std::string(word));
  return it == target_ids_.end() ? kUnknown : it->second;
}

double TranslationTable::ProbById(std::uint32_t source,
                                  std::uint32_t target) const {
  if (source == kUnknown || target == kUnknown) return 0.0;
  auto it = probs_.find(Key(source, target));
  return it == probs_.end() ? 0.0 : it->second;
}

double TranslationTable::Prob(std::string_view source,
                              std::string_view target) const {
  const std::uint32_t s =
      source == kNullWord ? 0 : SourceId(Normalize(source));
  return ProbById(s, TargetId(Normalize(target)));
}

double TranslationTable::NullProb(std::string_view target) const {
  return ProbById(0, TargetId(Normalize(target)));
}

void TranslationTable::Set(std::string_view source, std::string_view target,
                           double prob) {
  const std::uint32_t s = InternSource(source);
  const std::uint32_t t = InternTarget(target);
  probs_[Key(s, t)] = prob;
}

double TranslationTable::MaxNormalizationError() const {
  std::vector<double> sums(source_words_.size(), 0.0);
  std::vector<bool> seen(source_words_.size(), false);
  for (const auto& [key, prob] : probs_) {
    sums[key >> 32] += prob;
    seen[key >> 32] = true;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (seen[i]) worst = std::max(worst, std::abs(1.0 - sums[i]));
  }
  return worst;
}

std::string TranslationTable::Serialize() const {
  std::vector<std::tuple<std::string_view, std::string_view, double>> rows;
  rows.reserve(probs_.size());
  for (const auto& [key, prob] : probs_) {
    rows.emplace_back(source_words_[key >> 32],
                      target_words_[key & 0xffffffffu], prob);
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "# argproj-model1 lowercase=";
  out += lowercase_ ? "1\n" : "0\n";
  char buffer[32];
  for (const auto& [source, target, prob] : rows) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", prob);
    out += source;
    out += '\t';
    out += target;
    out += '\t';
    out += buffer;
    out += '\n';
  }
  return out;
}

TranslationTable TranslationTable::Parse(std::string_view text) {
  const auto lines = SplitLines(text);
  constexpr std::string_view kHeader = "# argproj-model1 lowercase=";
  if (lines.empty() || !lines[0].starts_with(kHeader)) {
    throw ParseError("missing translation table header", 1);
  }
  const std::string_view flag = lines[0].substr(kHeader.size());
  if (flag != "0" && flag != "1") {
    throw ParseError("bad lowercase flag", 1, kHeader.size() + 1);
  }
  TranslationTable table(flag == "1");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == line.npos ? line.npos : line.find('\t', tab1 + 1);
    if (tab2 == line.npos) throw ParseError("expected 3 fields", i + 1);
    const std::string prob_text(line.substr(tab2 + 1));
    char* end = nullptr;
    const double prob = std::strtod(prob_text.c_str(), &end);
    if (end != prob_text.c_str() + prob_text.size() || !(prob >= 0.0) ||
        prob > 1.0) {
      throw ParseError("bad probability '" + prob_text + "'", i + 1,
                       tab2 + 2);
    }
    table.Set(line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
              prob);
  }
  return table;
}

bool Model1Result::IsMonotone(double tolerance) const {
  for (std::size_t i = 1; i < log_likelihood.size(); ++i) {
    if (log_likelihood[i] < log_likelihood[i - 1] - tolerance) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kBatchPairs = 2048;

// Sentence pairs as ids plus, for every (source position, target position),
// the index of the t(f|e) parameter in a flat array.
class Model1Trainer {
 public:
  Model1Trainer(std::span<const ParallelSentence> corpus,
                const Model1Options& options)
      : options_(options) {
    Index(corpus);
  }

  Model1Result Train() {
    Model1Result result{TranslationTable(options_.lowercase), {}};
    std::vector<double> counts(probs_.size());
    bool converged = false;
    for (int iteration = 0; iteration < options_.iterations; ++iteration) {
      std::fill(counts.begin(), counts.end(), 0.0);
      const double ll = ExpectationStep(&counts);
      result.log_likelihood.push_back(ll);
      if (iteration > 0 && options_.epsilon > 0.0 &&
          ll - result.log_likelihood[result.log_likelihood.size() - 2] <
              options_.epsilon) {
        converged = true;
        break;
      }
      MaximizationStep(counts);
    }
    if (!converged) result.log_likelihood.push_back(ExpectationStep(nullptr));
    for (std::size_t e = 0; e < source_words_.size(); ++e) {
      for (std::size_t k = 0; k < targets_of_[e].size(); ++k) {
        result.table.Set(source_words_[e], target_words_[targets_of_[e][k]],
                         probs_[slot_begin_[e] + k]);
      }
    }
    return result;
  }

 private:
  struct Pair {
    std::size_t slot_offset;  // into slots_
    std::uint32_t source_len;  // including NULL
    std::uint32_t target_len;
  };

  void Index(std::span<const ParallelSentence> corpus) {
    std::unordered_map<std::string, std::uint32_t> source_ids{
        {std::string(TranslationTable::kNullWord), 0}};
    std::unordered_map<std::string, std::uint32_t> target_ids;
    source_words_.emplace_back(TranslationTable::kNullWord);
    auto intern = [](auto& ids, auto& words, std::string word) {
      auto [it, inserted] =
          ids.emplace(word, static_cast<std::uint32_t>(words.size()));
      if (inserted) words.push_back(std::move(word));
      return it->second;
    };
    auto normalize = [&](const std::string& word) {
      return options_.lowercase ? CaseFold(word) : word;
    };

    std::vector<std::vector<std::uint32_t>> source_sentences, target_sentences;
    for (const ParallelSentence& pair : corpus) {
      std::vector<std::uint32_t> source{0};
      for (const auto& w : pair.source) {
        source.push_back(intern(source_ids, source_words_, normalize(w)));
      }
      std::vector<std::uint32_t> target;
      for (const auto& w : pair.target) {
        target.push_back(intern(target_ids, target_words_, normalize(w)));
      }
      source_sentences.push_back(std::move(source));
      target_sentences.push_back(std::move(target));
    }

    targets_of_.assign(source_words_.size(), {});
    for (std::size_t p = 0; p < source_sentences.size(); ++p) {
      for (std::uint32_t e : source_sentences[p]) {
        auto& list = targets_of_[e];
        list.insert(list.end(), target_sentences[p].begin(),
                    target_sentences[p].end());
      }
    }
    slot_begin_.assign(source_words_.size() + 1, 0);
    for (std::size_t e = 0; e < targets_of_.size(); ++e) {
      auto& list = targets_of_[e];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      slot_begin_[e + 1] = slot_begin_[e] + list.size();
    }
    probs_.resize(slot_begin_.back());
    for (std::size_t e = 0; e < targets_of_.size(); ++e) {
      const double uniform = 1.0 / static_cast<double>(targets_of_[e].size());
      for (std::size_t s = slot_begin_[e]; s < slot_begin_[e + 1]; ++s) {
        probs_[s] = uniform;
      }
    }

    for (std::size_t p = 0; p < source_sentences.size(); ++p) {
      const auto& source = source_sentences[p];
      const auto& target = target_sentences[p];
      pairs_.push_back({slots_.size(),
                        static_cast<std::uint32_t>(source.size()),
                        static_cast<std::uint32_t>(target.size())});
      for (std::uint32_t f : target) {
        for (std::uint32_t e : source) {
          const auto& list = targets_of_[e];
          const auto it = std::lower_bound(list.begin(), list.end(), f);
          slots_.push_back(static_cast<std::uint32_t>(
              slot_begin_[e] + static_cast<std::size_t>(it - list.begin())));
        }
      }
    }
  }

  // Posterior link probabilities of one pair, laid out like its slots.
  // Returns the pair's log-likelihood.
  double Posteriors(const Pair& pair, double* out) const {
    double ll = 0.0;
    const std::uint32_t* slots = slots_.data() + pair.slot_offset;
    const double length_factor = 1.0 / pair.source_len;
    for (std::uint32_t j = 0; j < pair.target_len; ++j) {
      const std::uint32_t* row = slots + static_cast<std::size_t>(j) *
                                             pair.source_len;
      double total = 0.0;
      for (std::uint32_t i = 0; i < pair.source_len; ++i) {
        total += probs_[row[i]];
      }
      ll += std::log(total * length_factor);
      if (out != nullptr) {
        double* out_row = out + static_cast<std::size_t>(j) * pair.source_len;
        for (std::uint32_t i = 0; i < pair.source_len; ++i) {
          out_row[i] = probs_[row[i]] / total;
        }
      }
    }
    return ll;
  }

  // Adds expected counts into `counts` (when non-null) and returns the
  // corpus log-likelihood. Reduction runs in pair order so the result does
  // not depend on the number of jobs.
  double ExpectationStep(std::vector<double>* counts) const {
    const std::size_t jobs =
        static_cast<std::size_t>(std::max(1, options_.jobs));
    double ll = 0.0;
    std::vector<double> buffer;
    std::vector<double> pair_ll;
    for (std::size_t begin = 0; begin < pairs_.size(); begin += kBatchPairs) {
      const std::size_t end = std::min(pairs_.size(), begin + kBatchPairs);
      const std::size_t base = pairs_[begin].slot_offset;
      const std::size_t limit =
          end < pairs_.size() ? pairs_[end].slot_offset : slots_.size();
      if (counts != nullptr) buffer.assign(limit - base, 0.0);
      pair_ll.assign(end - begin, 0.0);
      auto work = [&](std::size_t worker) {
        for (std::size_t p = begin + worker; p < end; p += jobs) {
          double* out = counts == nullptr
                            ? nullptr
                            : buffer.data() + (pairs_[p].slot_offset - base);
          pair_ll[p - begin] = Posteriors(pairs_[p], out);
        }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& thread : threads) thread.join();
      }
      for (double value : pair_ll) ll += value;
      if (counts != nullptr) {
        for (std::size_t k = base; k < limit; ++k) {
          (*counts)[slots_[k]] += buffer[k - base];
        }
      }
    }
    return ll;
  }

  void MaximizationStep(const std::vector<double>& counts) {
    for (std::size_t e = 0; e < targets_of_.size(); ++e) {
      double total = 0.0;
      for (std::size_t s = slot_begin_[e]; s < slot_begin_[e + 1]; ++s) {
        total += counts[s];
      }
      if (total <= 0.0) continue;
      for (std::size_t s = slot_begin_[e]; s < slot_begin_[e + 1]; ++s) {
        probs_[s] = counts[s] / total;
      }
    }
  }

  Model1Options options_;
  std::vector<std::string> source_words_;
  std::vector<std::string> target_words_;
  std::vector<std::vector<std::uint32_t>> targets_of_;
  std::vector<std::size_t> slot_begin_;
  std::vector<double> probs_;
  std::vector<Pair> pairs_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

Model1Result TrainModel1(std::span<const ParallelSentence> corpus,
                         const Model1Options& options) {
  if (corpus.empty()) {
    throw ValidationError("cannot train Model 1 on an empty corpus");
  }
  if (options.iterations < 1) {
    throw ValidationError("iterations must be at least 1");
  }
  return Model1Trainer(corpus, options).Train();
}

SentenceAlignment AlignWithTable(const TranslationTable& table,
                                 const ParallelSentence& pair) {
  std::vector<std::uint32_t> source_ids;
  source_ids.reserve(pair.source.size());
  for (const auto& word : pair.source) {
    source_ids.push_back(table.SourceId(table.Normalize(word)));
  }
  std::vector<AlignmentLink> links;
  for (std::size_t j = 0; j < pair.target.size(); ++j) {
    const std::uint32_t f = table.TargetId(table.Normalize(pair.target[j]));
    double best = 0.0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < source_ids.size(); ++i) {
      const double prob = table.ProbById(source_ids[i], f);
      if (prob > best) {
        best = prob;
        best_index = i;
      }
    }
    if (best > 0.0 && best >= table.ProbById(0, f)) {
      links.push_back({best_index, j});
    }
  }
  return SentenceAlignment(pair.source.size(), pair.target.size(),
                           std::move(links));
}

}  // namespace argproj
