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

#include "argproj/datasetops.h"

#include <map>
#include <set>

#include "argproj/error.h"

namespace argproj {

std::uint64_t UniformBelow(std::mt19937_64& engine, std::uint64_t bound) {
  // Largest multiple of bound that fits; values above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t value;
  do {
    value = engine();
  } while (value >= limit);
  return value % bound;
}

Corpus MergeCorpora(std::span<const Corpus> corpora, std::uint64_t seed,
                    std::string name) {
  if (corpora.empty()) throw Error("nothing to merge");

  auto effective_id = [](const Corpus& corpus, const Document& document) {
    return document.id.empty() ? corpus.name : document.id;
  };
  std::map<std::string, std::set<std::size_t>> owners;
  for (std::size_t c = 0; c < corpora.size(); ++c) {
    for (const Document& document : corpora[c].documents) {
      owners[effective_id(corpora[c], document)].insert(c);
    }
  }

  Corpus merged;
  merged.name = std::move(name);
  for (const Corpus& corpus : corpora) {
    for (const Document& document : corpus.documents) {
      Document copy = document;
      copy.id = effective_id(corpus, document);
      if (owners[copy.id].size() > 1) copy.id = corpus.name + ":" + copy.id;
      if (copy.origin.empty()) copy.origin = corpus.name;
      merged.documents.push_back(std::move(copy));
    }
  }
  DeterministicShuffle(merged.documents, seed);
  try {
    merged.Validate();
  } catch (const ValidationError& e) {
    throw Error(std::string("cannot merge: ") + e.what() +
                " (give every corpus a distinct name)");
  }
  return merged;
}

std::string ExportRelations(
    std::span<const std::vector<RelationInstance>> parts) {
  std::string out;
  for (const auto& part : parts) out += SerializeRelations(part);
  return out;
}

ComponentStats Distribution::ComponentTotal() const {
  ComponentStats total;
  for (const auto& [name, stats] : components) total += stats;
  return total;
}

RelationStats Distribution::RelationTotal() const {
  RelationStats total;
  for (const auto& [name, stats] : relations) {
    for (std::size_t i = 0; i < total.counts.size(); ++i) {
      total.counts[i] += stats.counts[i];
    }
  }
  return total;
}

Distribution DistributionReport(
    std::span<const std::pair<std::string, Corpus>> corpora,
    std::span<const std::pair<std::string, std::vector<RelationInstance>>>
        relations) {
  Distribution distribution;
  for (const auto& [name, corpus] : corpora) {
    distribution.components.emplace_back(name, ComputeComponentStats(corpus));
  }
  for (const auto& [name, instances] : relations) {
    distribution.relations.emplace_back(name, ComputeRelationStats(instances));
  }
  return distribution;
}

}  // namespace argproj
