// Copyright 2026 The graphex Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphex/corpus/text.h"

#include <cctype>

namespace graphex::corpus {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool IsPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)); }
bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

Words Tokenize(std::string_view sentence) {
  Words tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : sentence) {
    if (IsSpace(c)) {
      flush();
    } else if (IsPunct(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  flush();
  return tokens;
}

std::vector<Words> SegmentAndTokenize(std::string_view text) {
  std::vector<Words> sentences;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!IsTerminal(text[i])) continue;
    if (i + 1 < text.size() && !IsSpace(text[i + 1])) continue;
    Words tokens = Tokenize(text.substr(start, i + 1 - start));
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
    start = i + 1;
  }
  if (start < text.size()) {
    Words tokens = Tokenize(text.substr(start));
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  }
  return sentences;
}

std::string JoinWords(const Words& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace graphex::corpus
