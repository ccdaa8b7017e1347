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

// UTF-8 helpers backed by ICU.

#ifndef ARGPROJ_TEXT_H_
#define ARGPROJ_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argproj {

// Byte offset of the first ill-formed sequence, or nullopt if `text` is
// valid UTF-8.
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

// True iff `text` is non-empty and every code point has Unicode general
// category P* (punctuation) or S* (symbol).
bool IsPunctuation(std::string_view text);

// True iff `text` contains a whitespace code point (ASCII or Unicode White_Space).
bool ContainsWhitespace(std::string_view text);

// Unicode default case folding.
std::string CaseFold(std::string_view text);

// Splits on runs of ASCII spaces and tabs; empty pieces are dropped.
std::vector<std::string> SplitTokens(std::string_view line);

// Splits `text` into lines on '\n'. A trailing newline does not produce an
// extra empty line; a trailing '\r' on each line is kept.
std::vector<std::string_view> SplitLines(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace argproj

#endif  // ARGPROJ_TEXT_H_
