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

#include "graphex/features/node_features.h"

#include <algorithm>

#include "graphex/common/error.h"
#include "graphex/common/log.h"

namespace graphex::features {

NodeFeatures NodeFeatures::Build(const corpus::Corpus& corpus,
                                 const EmbeddingTable* word_vectors,
                                 const EmbeddingTable* sentence_vectors,
                                 bool use_avg_word_embeddings, int node_dim) {
  if (word_vectors && word_vectors->size() == 0) word_vectors = nullptr;
  if (sentence_vectors && sentence_vectors->size() == 0) sentence_vectors = nullptr;
  const bool sentence_file = sentence_vectors && !use_avg_word_embeddings;

  NodeFeatures f;
  const auto& lexicon = corpus.lexicon();
  const int attr_dim = word_vectors ? word_vectors->dim() : node_dim;
  f.attributes_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lexicon.size()), attr_dim);
  for (size_t a = 0; a < lexicon.size(); ++a) {
    std::string key = lexicon.Surface(static_cast<AttributeIndex>(a));
    std::replace(key.begin(), key.end(), ' ', '_');
    std::optional<int> row = word_vectors ? word_vectors->Find(key) : std::nullopt;
    if (row) {
      f.attributes_.row(static_cast<Eigen::Index>(a)) = word_vectors->matrix().row(*row);
    } else {
      ++f.stats_.missing_attribute_vectors;
    }
  }

  const auto& sentences = corpus.sentences();
  const int sent_dim = sentence_file ? sentence_vectors->dim()
                                     : (word_vectors ? word_vectors->dim() : 0);
  if (sent_dim == 0) {
    throw ConfigError("sentence features need a sentence-vector file or word vectors");
  }
  f.sentences_.resize(static_cast<Eigen::Index>(sentences.size()), sent_dim);
  const auto& vocab = corpus.vocab();
  for (const auto& s : sentences) {
    std::optional<int> row =
        sentence_file ? sentence_vectors->Find(std::to_string(s.id)) : std::nullopt;
    if (row) {
      f.sentences_.row(s.id) = sentence_vectors->matrix().row(*row);
      continue;
    }
    if (sentence_file) ++f.stats_.missing_sentence_vectors;
    if (!word_vectors) {
      throw ConfigError("sentence " + std::to_string(s.id) +
                        " has no vector and no word vectors are available for the fallback");
    }
    if (s.tokens.empty()) ++f.stats_.empty_sentences;
    std::vector<std::string> words;
    words.reserve(s.tokens.size());
    for (TokenId t : s.tokens) words.push_back(vocab.Token(t));
    f.sentences_.row(s.id) = SentenceFallbackEmbedding(words, *word_vectors).transpose();
  }

  if (f.stats_.missing_attribute_vectors > 0) {
    Logger()->warn("{} attribute(s) have no vector; using zeros",
                   f.stats_.missing_attribute_vectors);
  }
  if (f.stats_.missing_sentence_vectors > 0) {
    Logger()->warn("{} sentence(s) have no vector; using averaged word vectors",
                   f.stats_.missing_sentence_vectors);
  }
  if (f.stats_.empty_sentences > 0) {
    Logger()->warn("{} empty sentence(s) embedded as zero vectors", f.stats_.empty_sentences);
  }
  return f;
}

model::GraphInputs NodeFeatures::Gather(const graph::PairGraph& graph) const {
  model::GraphInputs in;
  in.attributes.resize(graph.num_attributes(), attributes_.cols());
  for (int k = 0; k < graph.num_attributes(); ++k) {
    in.attributes.row(k) = attributes_.row(graph.attribute_nodes()[k]);
  }
  in.sentences.resize(graph.num_sentences(), sentences_.cols());
  for (int k = 0; k < graph.num_sentences(); ++k) {
    in.sentences.row(k) = sentences_.row(graph.sentence_nodes()[k]);
  }
  return in;
}

}  // namespace graphex::features
