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

#include "graphex/corpus/vocabulary.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "graphex/common/error.h"

namespace graphex::corpus {

Vocabulary::Vocabulary() {
  tokens_.emplace_back(kUnkToken);
  counts_.push_back(0);
  ids_.emplace(std::string(kUnkToken), kUnkId);
}

Vocabulary Vocabulary::Build(const std::vector<const Words*>& sentences,
                             size_t max_size) {
  std::map<std::string, int64_t> freq;
  for (const Words* words : sentences) {
    for (const auto& w : *words) ++freq[w];
  }
  std::vector<std::pair<std::string, int64_t>> ranked(freq.begin(), freq.end());
  // std::map iteration is already lexicographic, so a stable sort on count
  // yields the lexicographic tie-break.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_size) ranked.resize(max_size);

  Vocabulary vocab;
  for (auto& [token, count] : ranked) {
    const auto id = static_cast<TokenId>(vocab.tokens_.size());
    vocab.ids_.emplace(token, id);
    vocab.tokens_.push_back(std::move(token));
    vocab.counts_.push_back(count);
  }
  return vocab;
}

TokenId Vocabulary::Lookup(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnkId : it->second;
}

TokenSeq Vocabulary::Encode(const Words& words) const {
  TokenSeq ids;
  ids.reserve(words.size());
  for (const auto& w : words) ids.push_back(Lookup(w));
  return ids;
}

void Vocabulary::Save(const std::filesystem::path& vocab_path,
                      const std::filesystem::path& counts_path) const {
  std::ofstream vout(vocab_path);
  std::ofstream cout(counts_path);
  if (!vout || !cout) throw IoError("cannot write vocabulary to " + vocab_path.string());
  for (size_t i = 0; i < tokens_.size(); ++i) {
    vout << tokens_[i] << '\t' << i << '\n';
    cout << tokens_[i] << '\t' << counts_[i] << '\n';
  }
}

Vocabulary Vocabulary::Load(const std::filesystem::path& vocab_path,
                            const std::filesystem::path& counts_path) {
  std::ifstream vin(vocab_path);
  std::ifstream cin(counts_path);
  if (!vin || !cin) throw IoError("cannot read vocabulary from " + vocab_path.string());
  Vocabulary vocab;
  vocab.tokens_.clear();
  vocab.counts_.clear();
  vocab.ids_.clear();
  std::string line;
  while (std::getline(vin, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw IoError("malformed vocabulary line: " + line);
    const std::string token = line.substr(0, tab);
    const auto id = static_cast<TokenId>(std::stol(line.substr(tab + 1)));
    if (id != static_cast<TokenId>(vocab.tokens_.size())) {
      throw IoError("vocabulary ids are not dense at token '" + token + "'");
    }
    vocab.ids_.emplace(token, id);
    vocab.tokens_.push_back(token);
  }
  while (std::getline(cin, line)) {
    if (line.empty()) continue;
    vocab.counts_.push_back(std::stoll(line.substr(line.find('\t') + 1)));
  }
  if (vocab.tokens_.empty() || vocab.tokens_[0] != kUnkToken ||
      vocab.counts_.size() != vocab.tokens_.size()) {
    throw IoError("inconsistent vocabulary files at " + vocab_path.string());
  }
  return vocab;
}

}  // namespace graphex::corpus
