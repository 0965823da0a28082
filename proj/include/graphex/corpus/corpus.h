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

#ifndef GRAPHEX_CORPUS_CORPUS_H_
#define GRAPHEX_CORPUS_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/corpus/lexicon.h"
#include "graphex/corpus/reviews.h"
#include "graphex/corpus/split.h"
#include "graphex/corpus/vocabulary.h"

namespace graphex::corpus {

struct Sentence {
  SentenceIndex id = 0;
  ReviewIndex review = 0;
  TokenSeq tokens;
  std::vector<AttributeIndex> attributes;  // sorted, non-empty
  std::string text;                        // space-joined original tokens
};

struct Review {
  ReviewIndex id = 0;
  UserIndex user = 0;
  ItemIndex item = 0;
  double rating = 0.0;
  int source_line = 0;
  std::vector<SentenceIndex> sentences;
};

struct CorpusStats {
  size_t users = 0;
  size_t items = 0;
  size_t reviews = 0;
  size_t sentences = 0;
  size_t attributes = 0;  // distinct attributes occurring in retained sentences
};

struct CorpusOptions {
  double rating_threshold = 10.0;
  int min_activity = 15;
  size_t vocab_size = 20000;
  SplitRatios ratios;
  uint64_t seed = 7;
  MatchMode match_mode = MatchMode::kLowercase;
};

// Processed review corpus: interned users/items, attribute-tagged sentences,
// a training-only vocabulary and a seeded train/valid/test split.
class Corpus {
 public:
  Corpus() = default;

  // Interns ids, splits, builds the vocabulary from the training split and
  // encodes every sentence. `reviews` is expected to be segmented, tagged and
  // activity-filtered already.
  static Corpus Build(const ReviewSet& reviews, AttributeLexicon lexicon,
                      const CorpusOptions& options);

  // Assembles a corpus from persisted tables (see corpus_io.h).
  static Corpus FromTables(std::vector<std::string> users,
                           std::vector<std::string> items,
                           AttributeLexicon lexicon, Vocabulary vocab,
                           std::vector<Review> reviews,
                           std::vector<Sentence> sentences, CorpusSplit split);

  const std::vector<std::string>& users() const { return users_; }
  const std::vector<std::string>& items() const { return items_; }
  const AttributeLexicon& lexicon() const { return lexicon_; }
  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<Review>& reviews() const { return reviews_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  const CorpusSplit& split() const { return split_; }

  const Review& review(ReviewIndex r) const { return reviews_[r]; }
  const Sentence& sentence(SentenceIndex s) const { return sentences_[s]; }
  Partition partition(ReviewIndex r) const { return partition_[r]; }

  const std::vector<ReviewIndex>& UserTrainReviews(UserIndex u) const {
    return user_train_reviews_[u];
  }
  const std::vector<ReviewIndex>& ItemTrainReviews(ItemIndex c) const {
    return item_train_reviews_[c];
  }
  // Attributes mentioned in the user's (item's) training reviews, sorted.
  const std::vector<AttributeIndex>& UserTrainAttributes(UserIndex u) const {
    return user_train_attributes_[u];
  }
  const std::vector<AttributeIndex>& ItemTrainAttributes(ItemIndex c) const {
    return item_train_attributes_[c];
  }

  // Sentences of the user's and the item's training reviews, sorted by id.
  // Pools draw from the training split only, so held-out reviews never
  // contribute their own sentences. In train mode `target` (when given) must
  // be a training review of the pair and its sentences are pool members.
  std::vector<SentenceIndex> CandidatePool(UserIndex user, ItemIndex item,
                                           PoolMode mode,
                                           ReviewIndex target = -1) const;

  std::vector<TokenSeq> ReviewTokens(ReviewIndex r) const;

  CorpusStats Stats() const;

 private:
  void BuildIndexes();

  std::vector<std::string> users_;
  std::vector<std::string> items_;
  AttributeLexicon lexicon_;
  Vocabulary vocab_;
  std::vector<Review> reviews_;
  std::vector<Sentence> sentences_;
  CorpusSplit split_;

  std::vector<Partition> partition_;
  std::vector<std::vector<ReviewIndex>> user_train_reviews_;
  std::vector<std::vector<ReviewIndex>> item_train_reviews_;
  std::vector<std::vector<AttributeIndex>> user_train_attributes_;
  std::vector<std::vector<AttributeIndex>> item_train_attributes_;
};

struct PreprocessReport {
  size_t records_read = 0;
  size_t malformed_records = 0;
  size_t dropped_by_rating = 0;
  SegmentStats segmentation;
  size_t reviews_after_activity_filter = 0;
};

// Full preprocessing: ingest, segment/tag, activity filter, split, vocab.
Corpus Preprocess(const std::filesystem::path& reviews_path,
                  const AttributeLexicon& lexicon, const CorpusOptions& options,
                  PreprocessReport* report = nullptr);

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_CORPUS_H_
