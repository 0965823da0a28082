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

#ifndef GRAPHEX_CORPUS_VOCABULARY_H_
#define GRAPHEX_CORPUS_VOCABULARY_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/corpus/text.h"

namespace graphex::corpus {

// Token <-> id map. Id 0 is the reserved unknown token; the remaining ids are
// assigned by descending training frequency, ties broken lexicographically.
class Vocabulary {
 public:
  static constexpr TokenId kUnkId = 0;
  static constexpr std::string_view kUnkToken = "<unk>";

  Vocabulary();

  // `sentences` must come from the training split only.
  static Vocabulary Build(const std::vector<const Words*>& sentences,
                          size_t max_size);

  TokenId Lookup(std::string_view token) const;
  TokenSeq Encode(const Words& words) const;
  const std::string& Token(TokenId id) const { return tokens_[id]; }
  // Training frequency; 0 for the unknown token.
  int64_t Count(TokenId id) const { return counts_[id]; }
  // Includes the unknown token.
  size_t size() const { return tokens_.size(); }

  // token<TAB>id per line, in id order; counts go to a sibling file.
  void Save(const std::filesystem::path& vocab_path,
            const std::filesystem::path& counts_path) const;
  static Vocabulary Load(const std::filesystem::path& vocab_path,
                         const std::filesystem::path& counts_path);

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_ && counts_ == other.counts_;
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<int64_t> counts_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_VOCABULARY_H_
