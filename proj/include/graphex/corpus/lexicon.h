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

#ifndef GRAPHEX_CORPUS_LEXICON_H_
#define GRAPHEX_CORPUS_LEXICON_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/corpus/text.h"

namespace graphex::corpus {

enum class MatchMode { kExact, kLowercase };

// Attribute vocabulary. Entries may be multiword ("front desk"); a multiword
// entry matches a contiguous run of tokens. Ids are dense, in file order.
class AttributeLexicon {
 public:
  AttributeLexicon() = default;

  // Throws ConfigError on duplicate entries (after normalization).
  static AttributeLexicon FromEntries(const std::vector<std::string>& entries,
                                      MatchMode mode = MatchMode::kLowercase);
  // One entry per line; blank lines are ignored. Throws IoError.
  static AttributeLexicon Load(const std::filesystem::path& path,
                               MatchMode mode = MatchMode::kLowercase);

  size_t size() const { return surfaces_.size(); }
  MatchMode mode() const { return mode_; }
  const std::string& Surface(AttributeIndex id) const { return surfaces_[id]; }
  const Words& EntryTokens(AttributeIndex id) const { return entries_[id]; }
  std::optional<AttributeIndex> Find(std::string_view surface) const;

  // Every attribute whose entry occurs in `tokens`, sorted ascending.
  std::vector<AttributeIndex> Tag(std::span<const std::string> tokens) const;

 private:
  MatchMode mode_ = MatchMode::kLowercase;
  std::vector<std::string> surfaces_;
  std::vector<Words> entries_;
  std::unordered_map<std::string, std::vector<AttributeIndex>> by_first_token_;
  std::unordered_map<std::string, AttributeIndex> by_surface_;
};

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_LEXICON_H_
