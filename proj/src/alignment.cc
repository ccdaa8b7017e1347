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

#include "argproj/alignment.h"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "argproj/error.h"

namespace argproj {
namespace {

bool ParseIndex(std::string_view text, std::size_t* out) {
  if (text.empty()) return false;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && end == text.data() + text.size();
}

}  // namespace

SentenceAlignment::SentenceAlignment(std::size_t src_len, std::size_t tgt_len,
                                     std::vector<AlignmentLink> links)
    : src_len_(src_len), tgt_len_(tgt_len), links_(std::move(links)) {
  for (const AlignmentLink& link : links_) {
    if (link.src >= src_len_ || link.tgt >= tgt_len_) {
      throw ValidationError("link " + std::to_string(link.src) + "-" +
                            std::to_string(link.tgt) + " outside " +
                            std::to_string(src_len_) + "x" +
                            std::to_string(tgt_len_) + " grid");
    }
  }
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

bool SentenceAlignment::Contains(AlignmentLink link) const {
  return std::binary_search(links_.begin(), links_.end(), link);
}

SentenceAlignment SentenceAlignment::Transposed() const {
  std::vector<AlignmentLink> swapped;
  swapped.reserve(links_.size());
  for (const AlignmentLink& link : links_) {
    swapped.push_back({link.tgt, link.src});
  }
  return SentenceAlignment(tgt_len_, src_len_, std::move(swapped));
}

SentenceAlignment ParsePharaoh(std::string_view line, std::size_t src_len,
                               std::size_t tgt_len, std::size_t line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<AlignmentLink> links;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view pair = line.substr(pos, end - pos);
    const std::size_t dash = pair.find('-');
    AlignmentLink link;
    if (dash == std::string_view::npos ||
        !ParseIndex(pair.substr(0, dash), &link.src) ||
        !ParseIndex(pair.substr(dash + 1), &link.tgt)) {
      throw ParseError("malformed alignment pair '" + std::string(pair) + "'",
                       line_no, pos + 1);
    }
    if (link.src >= src_len || link.tgt >= tgt_len) {
      throw ParseError("alignment pair '" + std::string(pair) +
                           "' out of range for " + std::to_string(src_len) +
                           "x" + std::to_string(tgt_len) + " sentence pair",
                       line_no, pos + 1);
    }
    links.push_back(link);
    pos = end;
  }
  return SentenceAlignment(src_len, tgt_len, std::move(links));
}

std::string FormatPharaoh(const SentenceAlignment& alignment) {
  std::string out;
  for (const AlignmentLink& link : alignment.links()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(link.src);
    out += '-';
    out += std::to_string(link.tgt);
  }
  return out;
}

SentenceAlignment Symmetrize(const SentenceAlignment& forward,
                             const SentenceAlignment& reverse,
                             SymmetrizeMethod method) {
  if (forward.src_len() != reverse.src_len() ||
      forward.tgt_len() != reverse.tgt_len()) {
    throw MismatchError("cannot symmetrize a " +
                        std::to_string(forward.src_len()) + "x" +
                        std::to_string(forward.tgt_len()) +
                        " alignment with a " +
                        std::to_string(reverse.src_len()) + "x" +
                        std::to_string(reverse.tgt_len()) + " alignment");
  }
  std::vector<AlignmentLink> links;
  const auto& a = forward.links();
  const auto& b = reverse.links();
  if (method == SymmetrizeMethod::kIntersection) {
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(links));
  } else {
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(links));
  }
  return SentenceAlignment(forward.src_len(), forward.tgt_len(),
                           std::move(links));
}

}  // namespace argproj
