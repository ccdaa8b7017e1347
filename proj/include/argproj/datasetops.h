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

// Corpus assembly: multilingual merges, relation exports and label
// distributions.

#ifndef ARGPROJ_DATASETOPS_H_
#define ARGPROJ_DATASETOPS_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "argproj/corpus.h"
#include "argproj/relations.h"

namespace argproj {

// Uniform integer in [0, bound) from a 64-bit engine by rejection, so the
// sequence is the same with every standard library.
std::uint64_t UniformBelow(std::mt19937_64& engine, std::uint64_t bound);

// Fisher-Yates with UniformBelow.
template <typename T>
void DeterministicShuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = UniformBelow(engine, i);
    std::swap(items[i - 1], items[j]);
  }
}

// Concatenates the documents of all corpora and shuffles them (whole
// documents, never sentences) with `seed`. Each document records its
// corpus name as origin. An id used by more than one corpus becomes
// "<corpus>:<id>" everywhere; an unnamed document takes the corpus name.
// Throws Error on an empty input or if ids still collide.
Corpus MergeCorpora(std::span<const Corpus> corpora, std::uint64_t seed,
                    std::string name = "merged");

// Concatenation in the given order, validated.
std::string ExportRelations(
    std::span<const std::vector<RelationInstance>> parts);

struct Distribution {
  std::vector<std::pair<std::string, ComponentStats>> components;
  std::vector<std::pair<std::string, RelationStats>> relations;

  ComponentStats ComponentTotal() const;
  RelationStats RelationTotal() const;
};

Distribution DistributionReport(
    std::span<const std::pair<std::string, Corpus>> corpora,
    std::span<const std::pair<std::string, std::vector<RelationInstance>>>
        relations);

}  // namespace argproj

#endif  // ARGPROJ_DATASETOPS_H_
