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

#ifndef GRAPHEX_FEATURES_NODE_FEATURES_H_
#define GRAPHEX_FEATURES_NODE_FEATURES_H_

#include <Eigen/Dense>

#include "graphex/corpus/corpus.h"
#include "graphex/features/embedding_table.h"
#include "graphex/graph/pair_graph.h"
#include "graphex/model/model.h"

namespace graphex::features {

struct FeatureStats {
  size_t missing_attribute_vectors = 0;  // filled with zeros
  size_t missing_sentence_vectors = 0;   // filled with the word average
  size_t empty_sentences = 0;            // zero vector
};

// Frozen input vectors for every attribute and sentence of a corpus.
//
// Attribute vectors come from the word-vector table, keyed by the attribute
// surface string (spaces replaced by '_'). Sentence vectors come from the
// sentence-vector table keyed by sentence id, falling back to the average of
// the sentence's word vectors when absent, when no table is given, or when
// `use_avg_word_embeddings` is set.
class NodeFeatures {
 public:
  // `word_vectors` may be null only if a sentence table covers every
  // sentence and `use_avg_word_embeddings` is off; attributes then get zero
  // vectors of width `node_dim`. Throws ConfigError otherwise.
  static NodeFeatures Build(const corpus::Corpus& corpus,
                            const EmbeddingTable* word_vectors,
                            const EmbeddingTable* sentence_vectors,
                            bool use_avg_word_embeddings, int node_dim);

  int attribute_dim() const { return static_cast<int>(attributes_.cols()); }
  int sentence_dim() const { return static_cast<int>(sentences_.cols()); }
  const Eigen::MatrixXd& attributes() const { return attributes_; }
  const Eigen::MatrixXd& sentences() const { return sentences_; }
  const FeatureStats& stats() const { return stats_; }

  model::GraphInputs Gather(const graph::PairGraph& graph) const;

 private:
  Eigen::MatrixXd attributes_;
  Eigen::MatrixXd sentences_;
  FeatureStats stats_;
};

}  // namespace graphex::features

#endif  // GRAPHEX_FEATURES_NODE_FEATURES_H_
