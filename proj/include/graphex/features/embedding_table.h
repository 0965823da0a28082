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

#ifndef GRAPHEX_FEATURES_EMBEDDING_TABLE_H_
#define GRAPHEX_FEATURES_EMBEDDING_TABLE_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace graphex::features {

// id -> vector map with a shared dimension.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(int dim, bool trainable) : dim_(dim), trainable_(trainable) {}

  // Text vector file: first line "<count> <dim>", then "<id> v1 ... vdim"
  // per row. Throws IoError naming the row on a length mismatch, a
  // duplicate id or a count mismatch. An empty file yields an empty table.
  static EmbeddingTable LoadVectorFile(const std::filesystem::path& path);
  static EmbeddingTable ParseVectors(std::istream& in, const std::string& source);

  // `count` rows with entries uniform in [-scale, scale]; ids "0".."count-1".
  static EmbeddingTable InitTrainable(int count, int dim, uint64_t seed, double scale);

  int dim() const { return dim_; }
  size_t size() const { return ids_.size(); }
  bool trainable() const { return trainable_; }
  const Eigen::MatrixXd& matrix() const { return values_; }
  const std::vector<std::string>& ids() const { return ids_; }

  std::optional<int> Find(std::string_view id) const;
  Eigen::VectorXd Row(int index) const { return values_.row(index).transpose(); }

 private:
  int dim_ = 0;
  bool trainable_ = false;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  Eigen::MatrixXd values_;
};

// Mean of the word vectors of `words`. Words absent from `word_table`
// contribute the table's "<unk>" row, or zeros when the table has none.
// An empty word list yields a zero vector (the caller counts a warning).
Eigen::VectorXd SentenceFallbackEmbedding(const std::vector<std::string>& words,
                                          const EmbeddingTable& word_table);

}  // namespace graphex::features

#endif  // GRAPHEX_FEATURES_EMBEDDING_TABLE_H_
