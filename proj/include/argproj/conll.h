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

// CoNLL-style corpus files:
//
//   #doc <id> [origin=<corpus>]
//   token<TAB>tag
//   token<TAB>tag
//   <blank line>
//
// Sentences before the first "#doc" line belong to an unnamed document.

#ifndef ARGPROJ_CONLL_H_
#define ARGPROJ_CONLL_H_

#include <string>
#include <string_view>

#include "argproj/corpus.h"

namespace argproj {

// Throws ParseError with the 1-based line (and column when meaningful).
Corpus ParseConll(std::string_view text, IobMode mode = IobMode::kStrict,
                  std::string name = "");

std::string SerializeConll(const Corpus& corpus);

Corpus ReadConllFile(const std::string& path, IobMode mode);
void WriteConllFile(const std::string& path, const Corpus& corpus);

}  // namespace argproj

#endif  // ARGPROJ_CONLL_H_
