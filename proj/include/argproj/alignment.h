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

// Word alignments between a source and a target sentence, in Pharaoh
// notation: "i-j" links source token i to target token j.

#ifndef ARGPROJ_ALIGNMENT_H_
#define ARGPROJ_ALIGNMENT_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace argproj {

struct AlignmentLink {
  std::size_t src = 0;
  std::size_t tgt = 0;

  auto operator<=>(const AlignmentLink&) const = default;
};

// A set of links over a src_len x tgt_len grid. Links are kept sorted by
// (src, tgt) without duplicates.
class SentenceAlignment {
 public:
  SentenceAlignment() = default;
  // Throws ValidationError if a link is out of range. Duplicates collapse.
  SentenceAlignment(std::size_t src_len, std::size_t tgt_len,
                    std::vector<AlignmentLink> links = {});

  std::size_t src_len() const { return src_len_; }
  std::size_t tgt_len() const { return tgt_len_; }
  const std::vector<AlignmentLink>& links() const { return links_; }
  bool empty() const { return links_.empty(); }
  bool Contains(AlignmentLink link) const;

  // Swaps the roles of source and target.
  SentenceAlignment Transposed() const;

  bool operator==(const SentenceAlignment&) const = default;

 private:
  std::size_t src_len_ = 0;
  std::size_t tgt_len_ = 0;
  std::vector<AlignmentLink> links_;
};

// Parses one line of space-separated "i-j" pairs. `line_no` only decorates
// error messages. Throws ParseError.
SentenceAlignment ParsePharaoh(std::string_view line, std::size_t src_len,
                               std::size_t tgt_len, std::size_t line_no = 1);

// Canonical form: links ordered by source then target, single spaces, no
// trailing newline.
std::string FormatPharaoh(const SentenceAlignment& alignment);

enum class SymmetrizeMethod { kIntersection, kUnion };

// Both alignments must be in source-to-target orientation (transpose the
// output of a reverse-direction aligner first). Throws MismatchError when
// the grid sizes differ.
SentenceAlignment Symmetrize(const SentenceAlignment& forward,
                             const SentenceAlignment& reverse,
                             SymmetrizeMethod method);

}  // namespace argproj

#endif  // ARGPROJ_ALIGNMENT_H_
