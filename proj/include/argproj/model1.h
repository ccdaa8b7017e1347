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

// IBM Model 1 lexical translation model trained with EM, and Viterbi
// alignment under it. Every source sentence gets one extra NULL word so
// that target words can stay unaligned.

#ifndef ARGPROJ_MODEL1_H_
#define ARGPROJ_MODEL1_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argproj/alignment.h"

namespace argproj {

struct ParallelSentence {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// Reads two line-aligned files of space-separated tokens. Throws
// MismatchError when the line counts differ.
std::vector<ParallelSentence> ReadParallelText(const std::string& source_path,
                                               const std::string& target_path);

// t(target word | source word). Source id 0 is the NULL word.
class TranslationTable {
 public:
  static constexpr std::string_view kNullWord = "<NULL>";

  explicit TranslationTable(bool lowercase = false);

  bool lowercase() const { return lowercase_; }

  // Probability of `target` given `source`; 0 for unseen pairs. Pass
  // kNullWord as `source` for the NULL word. Case folding is applied when
  // the table was trained lowercased.
  double Prob(std::string_view source, std::string_view target) const;
  double NullProb(std::string_view target) const;

  // Sets (or adds) one entry. Words are stored as given.
  void Set(std::string_view source, std::string_view target, double prob);

  std::size_t source_vocab_size() const { return source_words_.size(); }

  // Largest |1 - sum_f t(f|e)| over source words that have entries.
  double MaxNormalizationError() const;

  // "# argproj-model1 lowercase=<0|1>" then "src<TAB>tgt<TAB>prob" lines,
  // sorted by source then target word.
  std::string Serialize() const;
  static TranslationTable Parse(std::string_view text);

  // Interned ids; npos when unknown.
  static constexpr std::uint32_t kUnknown = UINT32_MAX;
  std::uint32_t SourceId(std::string_view word) const;
  std::uint32_t TargetId(std::string_view word) const;
  double ProbById(std::uint32_t source, std::uint32_t target) const;

  std::string Normalize(std::string_view word) const;

 private:
  static std::uint64_t Key(std::uint32_t source, std::uint32_t target) {
    return (static_cast<std::uint64_t>(source) << 32) | target;
  }
  std::uint32_t InternSource(std::string_view word);
  std::uint32_t InternTarget(std::string_view word);

  bool lowercase_;
  std::vector<std::string> source_words_;
  std::vector<std::string> target_words_;
  std::unordered_map<std::string, std::uint32_t> source_ids_;
  std::unordered_map<std::string, std::uint32_t> target_ids_;
  std::unordered_map<std::uint64_t, double> probs_;
};

struct Model1Options {
  int iterations = 5;
  // Stop early once an iteration improves the log-likelihood by less than
  // this. 0 runs all iterations.
  double epsilon = 0.0;
  bool lowercase = false;
  // Worker threads for the E-step. Results are bit-identical for any value.
  int jobs = 1;
};

struct Model1Result {
  TranslationTable table;
  // Corpus log-likelihood under the initial parameters and after each EM
  // iteration; size is (iterations run + 1).
  std::vector<double> log_likelihood;

  // True iff the log-likelihood never drops by more than `tolerance`.
  bool IsMonotone(double tolerance = 1e-9) const;
};

// Throws Error on an empty corpus or iterations < 1.
Model1Result TrainModel1(std::span<const ParallelSentence> corpus,
                         const Model1Options& options);

// Links each target token to its most probable source token, unless the
// NULL word is strictly more probable or no source word has any
// probability for it. Ties go to the smaller source index.
SentenceAlignment AlignWithTable(const TranslationTable& table,
                                 const ParallelSentence& pair);

}  // namespace argproj

#endif  // ARGPROJ_MODEL1_H_
