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

#include "argproj/conll.h"

#include <filesystem>
#include <set>
#include <utility>
#include <vector>

#include "argproj/error.h"
#include "argproj/text.h"

namespace argproj {
namespace {

constexpr std::string_view kDocPrefix = "#doc ";
constexpr std::string_view kOriginPrefix = "origin=";

class ConllReader {
 public:
  ConllReader(IobMode mode, std::string name) : mode_(mode) {
    corpus_.name = std::move(name);
  }

  Corpus Read(std::string_view text) {
    const auto lines = SplitLines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::string_view line = lines[i];
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ReadLine(line, i + 1);
    }
    FlushSentence();
    return std::move(corpus_);
  }

 private:
  void ReadLine(std::string_view line, std::size_t line_no) {
    if (auto bad = FindInvalidUtf8(line)) {
      throw ParseError("invalid UTF-8", line_no, *bad + 1);
    }
    if (line.empty()) {
      FlushSentence();
      return;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos && line.starts_with(kDocPrefix)) {
      FlushSentence();
      OpenDocument(line.substr(kDocPrefix.size()), line_no);
      return;
    }
    if (tab == std::string_view::npos) {
      throw ParseError("malformed line: expected token<TAB>tag", line_no);
    }
    const std::string_view word = line.substr(0, tab);
    const std::string_view tag = line.substr(tab + 1);
    if (word.empty()) throw ParseError("empty token", line_no, 1);
    if (ContainsWhitespace(word)) {
      throw ParseError("token contains whitespace", line_no, 1);
    }
    if (!ParseIobTag(tag)) {
      throw ParseError("invalid tag '" + std::string(tag) + "'", line_no,
                       tab + 2);
    }
    if (words_.empty()) first_line_ = line_no;
    words_.emplace_back(word);
    tags_.emplace_back(tag);
  }

  void OpenDocument(std::string_view rest, std::size_t line_no) {
    const std::size_t space = rest.find(' ');
    const std::string_view id = rest.substr(0, space);
    std::string_view origin;
    if (space != std::string_view::npos) {
      const std::string_view extra = rest.substr(space + 1);
      if (!extra.starts_with(kOriginPrefix) || extra.find(' ') != extra.npos) {
        throw ParseError("malformed #doc line", line_no, kDocPrefix.size() +
                                                             space + 2);
      }
      origin = extra.substr(kOriginPrefix.size());
    }
    if (id.empty()) throw ParseError("empty document id", line_no);
    if (!ids_.emplace(id).second) {
      throw ParseError("duplicate document id '" + std::string(id) + "'",
                       line_no);
    }
    Document document;
    document.id = std::string(id);
    document.origin = std::string(origin);
    corpus_.documents.push_back(std::move(document));
  }

  void FlushSentence() {
    if (words_.empty()) return;
    std::vector<Span> spans;
    try {
      spans = IobToSpans(tags_, mode_);
    } catch (const IobError& e) {
      throw ParseError(e.detail(), first_line_ + e.index());
    }
    if (corpus_.documents.empty()) corpus_.documents.emplace_back();
    corpus_.documents.back().sentences.push_back(
        AnnotatedSentence::FromWords(words_, std::move(spans)));
    words_.clear();
    tags_.clear();
  }

  IobMode mode_;
  Corpus corpus_;
  std::set<std::string, std::less<>> ids_;
  std::vector<std::string> words_;
  std::vector<std::string> tags_;
  std::size_t first_line_ = 0;
};

}  // namespace

Corpus ParseConll(std::string_view text, IobMode mode, std::string name) {
  return ConllReader(mode, std::move(name)).Read(text);
}

std::string SerializeConll(const Corpus& corpus) {
  corpus.Validate();
  std::string out;
  for (const Document& document : corpus.documents) {
    if (!document.id.empty()) {
      out += kDocPrefix;
      out += document.id;
      if (!document.origin.empty()) {
        out += ' ';
        out += kOriginPrefix;
        out += document.origin;
      }
      out += '\n';
    }
    for (const AnnotatedSentence& sentence : document.sentences) {
      const auto tags = SpansToIob(sentence);
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        out += sentence.tokens()[i].text;
        out += '\t';
        out += tags[i];
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

Corpus ReadConllFile(const std::string& path, IobMode mode) {
  try {
    return ParseConll(ReadFile(path), mode,
                      std::filesystem::path(path).stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.line(), e.column());
  }
}

void WriteConllFile(const std::string& path, const Corpus& corpus) {
  WriteFile(path, SerializeConll(corpus));
}

}  // namespace argproj
