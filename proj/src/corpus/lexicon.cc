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

#include "graphex/corpus/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "graphex/common/error.h"

namespace graphex::corpus {

namespace {

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Words SplitWhitespace(const std::string& line) {
  Words out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

AttributeLexicon AttributeLexicon::FromEntries(
    const std::vector<std::string>& entries, MatchMode mode) {
  AttributeLexicon lex;
  lex.mode_ = mode;
  for (const std::string& raw : entries) {
    Words words = SplitWhitespace(raw);
    if (words.empty()) continue;
    if (mode == MatchMode::kLowercase) {
      for (auto& w : words) w = Lower(w);
    }
    std::string surface = JoinWords(words);
    if (lex.by_surface_.contains(surface)) {
      throw ConfigError("duplicate attribute in lexicon: '" + surface + "'");
    }
    const auto id = static_cast<AttributeIndex>(lex.surfaces_.size());
    lex.by_surface_.emplace(surface, id);
    lex.by_first_token_[words.front()].push_back(id);
    lex.surfaces_.push_back(std::move(surface));
    lex.entries_.push_back(std::move(words));
  }
  return lex;
}

AttributeLexicon AttributeLexicon::Load(const std::filesystem::path& path,
                                        MatchMode mode) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read attribute lexicon: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return FromEntries(lines, mode);
}

std::optional<AttributeIndex> AttributeLexicon::Find(
    std::string_view surface) const {
  std::string key(surface);
  if (mode_ == MatchMode::kLowercase) key = Lower(key);
  auto it = by_surface_.find(key);
  if (it == by_surface_.end()) return std::nullopt;
  return it->second;
}

std::vector<AttributeIndex> AttributeLexicon::Tag(
    std::span<const std::string> tokens) const {
  std::vector<AttributeIndex> found;
  std::vector<std::string> normalized;
  if (mode_ == MatchMode::kLowercase) {
    normalized.reserve(tokens.size());
    for (const auto& t : tokens) normalized.push_back(Lower(t));
    tokens = normalized;
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    auto it = by_first_token_.find(tokens[i]);
    if (it == by_first_token_.end()) continue;
    for (AttributeIndex id : it->second) {
      const Words& entry = entries_[id];
      if (i + entry.size() > tokens.size()) continue;
      if (std::equal(entry.begin(), entry.end(), tokens.begin() + i)) {
        found.push_back(id);
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace graphex::corpus
