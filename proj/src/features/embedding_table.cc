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

#include "graphex/features/embedding_table.h"

#include <fstream>
#include <sstream>

#include "graphex/common/error.h"
#include "graphex/common/log.h"
#include "graphex/model/params.h"

namespace graphex::features {

EmbeddingTable EmbeddingTable::ParseVectors(std::istream& in, const std::string& source) {
  std::string line;
  size_t line_no = 0;
  // Header.
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (line.find_first_not_of(" \t\r") == std::string::npos) {
    Logger()->warn("vector file {} is empty", source);
    return EmbeddingTable(0, false);
  }
  long long count = -1, dim = -1;
  {
    std::istringstream header(line);
    if (!(header >> count >> dim) || count < 0 || dim <= 0) {
      throw IoError(source + ": header must be '<count> <dim>'");
    }
  }
  EmbeddingTable table(static_cast<int>(dim), false);
  table.values_.resize(count, dim);
  long long row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string id;
    fields >> id;
    if (row >= count) {
      throw IoError(source + ": more rows than the declared count " + std::to_string(count));
    }
    std::vector<double> values;
    std::string tok;
    while (fields >> tok) {
      try {
        size_t used = 0;
        values.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw IoError(source + ": row " + std::to_string(row) + " (line " +
                      std::to_string(line_no) + ") has a non-numeric value '" + tok + "'");
      }
    }
    if (static_cast<long long>(values.size()) != dim) {
      throw IoError(source + ": row " + std::to_string(row) + " (id '" + id + "') has " +
                    std::to_string(values.size()) + " values, expected " + std::to_string(dim));
    }
    if (!table.index_.emplace(id, static_cast<int>(row)).second) {
      throw IoError(source + ": duplicate id '" + id + "' at row " + std::to_string(row));
    }
    table.ids_.push_back(id);
    for (long long c = 0; c < dim; ++c) table.values_(row, c) = values[c];
    ++row;
  }
  if (row != count) {
    throw IoError(source + ": declared " + std::to_string(count) + " rows, found " +
                  std::to_string(row));
  }
  return table;
}

EmbeddingTable EmbeddingTable::LoadVectorFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read vector file " + path.string());
  return ParseVectors(in, path.string());
}

EmbeddingTable EmbeddingTable::InitTrainable(int count, int dim, uint64_t seed, double scale) {
  if (count <= 0 || dim <= 0) throw ConfigError("embedding table dims must be positive");
  EmbeddingTable table(dim, true);
  table.values_ = model::UniformMatrix(count, dim, scale, seed);
  for (int i = 0; i < count; ++i) {
    table.ids_.push_back(std::to_string(i));
    table.index_.emplace(table.ids_.back(), i);
  }
  return table;
}

std::optional<int> EmbeddingTable::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::VectorXd SentenceFallbackEmbedding(const std::vector<std::string>& words,
                                          const EmbeddingTable& word_table) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(word_table.dim());
  if (words.empty()) return sum;
  const auto unk = word_table.Find("<unk>");
  for (const auto& w : words) {
    if (auto row = word_table.Find(w)) {
      sum += word_table.matrix().row(*row).transpose();
    } else if (unk) {
      sum += word_table.matrix().row(*unk).transpose();
    }
  }
  return sum / static_cast<double>(words.size());
}

}  // namespace graphex::features
