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

#include "graphex/corpus/corpus.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "graphex/common/error.h"
#include "graphex/common/log.h"

namespace graphex::corpus {

namespace {

template <typename T>
void SortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Corpus Corpus::Build(const ReviewSet& records, AttributeLexicon lexicon,
                     const CorpusOptions& options) {
  Corpus corpus;
  corpus.lexicon_ = std::move(lexicon);

  std::unordered_map<std::string, UserIndex> user_ids;
  std::unordered_map<std::string, ItemIndex> item_ids;
  for (const auto& rec : records) {
    if (user_ids.emplace(rec.user_id, static_cast<UserIndex>(corpus.users_.size())).second) {
      corpus.users_.push_back(rec.user_id);
    }
    if (item_ids.emplace(rec.item_id, static_cast<ItemIndex>(corpus.items_.size())).second) {
      corpus.items_.push_back(rec.item_id);
    }
  }

  corpus.split_ = SplitCorpus(records.size(), options.ratios, options.seed);

  std::vector<const Words*> train_sentences;
  for (ReviewIndex r : corpus.split_.train) {
    for (const auto& s : records[r].sentences) train_sentences.push_back(&s.words);
  }
  corpus.vocab_ = Vocabulary::Build(train_sentences, options.vocab_size);

  for (size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    Review review;
    review.id = static_cast<ReviewIndex>(r);
    review.user = user_ids.at(rec.user_id);
    review.item = item_ids.at(rec.item_id);
    review.rating = rec.rating;
    review.source_line = rec.source_line;
    for (const auto& tagged : rec.sentences) {
      Sentence s;
      s.id = static_cast<SentenceIndex>(corpus.sentences_.size());
      s.review = review.id;
      s.tokens = corpus.vocab_.Encode(tagged.words);
      s.attributes = tagged.attributes;
      s.text = JoinWords(tagged.words);
      review.sentences.push_back(s.id);
      corpus.sentences_.push_back(std::move(s));
    }
    corpus.reviews_.push_back(std::move(review));
  }
  corpus.BuildIndexes();
  return corpus;
}

Corpus Corpus::FromTables(std::vector<std::string> users,
                          std::vector<std::string> items,
                          AttributeLexicon lexicon, Vocabulary vocab,
                          std::vector<Review> reviews,
                          std::vector<Sentence> sentences, CorpusSplit split) {
  Corpus corpus;
  corpus.users_ = std::move(users);
  corpus.items_ = std::move(items);
  corpus.lexicon_ = std::move(lexicon);
  corpus.vocab_ = std::move(vocab);
  corpus.reviews_ = std::move(reviews);
  corpus.sentences_ = std::move(sentences);
  corpus.split_ = std::move(split);
  corpus.BuildIndexes();
  return corpus;
}

void Corpus::BuildIndexes() {
  partition_.assign(reviews_.size(), Partition::kTrain);
  for (ReviewIndex r : split_.valid) partition_.at(r) = Partition::kValid;
  for (ReviewIndex r : split_.test) partition_.at(r) = Partition::kTest;
  if (split_.train.size() + split_.valid.size() + split_.test.size() != reviews_.size()) {
    throw Error("split does not cover every review exactly once");
  }

  user_train_reviews_.assign(users_.size(), {});
  item_train_reviews_.assign(items_.size(), {});
  user_train_attributes_.assign(users_.size(), {});
  item_train_attributes_.assign(items_.size(), {});
  for (ReviewIndex r : split_.train) {
    const Review& review = reviews_[r];
    user_train_reviews_[review.user].push_back(r);
    item_train_reviews_[review.item].push_back(r);
    for (SentenceIndex s : review.sentences) {
      const auto& attrs = sentences_[s].attributes;
      auto& ua = user_train_attributes_[review.user];
      auto& ia = item_train_attributes_[review.item];
      ua.insert(ua.end(), attrs.begin(), attrs.end());
      ia.insert(ia.end(), attrs.begin(), attrs.end());
    }
  }
  for (auto& v : user_train_attributes_) SortUnique(v);
  for (auto& v : item_train_attributes_) SortUnique(v);
}

std::vector<SentenceIndex> Corpus::CandidatePool(UserIndex user, ItemIndex item,
                                                 PoolMode mode,
                                                 ReviewIndex target) const {
  std::vector<SentenceIndex> pool;
  for (ReviewIndex r : user_train_reviews_.at(user)) {
    const auto& s = reviews_[r].sentences;
    pool.insert(pool.end(), s.begin(), s.end());
  }
  for (ReviewIndex r : item_train_reviews_.at(item)) {
    const auto& s = reviews_[r].sentences;
    pool.insert(pool.end(), s.begin(), s.end());
  }
  SortUnique(pool);
  if (mode == PoolMode::kTrain && target >= 0) {
    const Review& t = reviews_.at(target);
    if (t.user != user || t.item != item || partition_[target] != Partition::kTrain) {
      throw Error("train-mode target review must be a training review of the pair");
    }
  }
  return pool;
}

std::vector<TokenSeq> Corpus::ReviewTokens(ReviewIndex r) const {
  std::vector<TokenSeq> out;
  for (SentenceIndex s : reviews_.at(r).sentences) out.push_back(sentences_[s].tokens);
  return out;
}

CorpusStats Corpus::Stats() const {
  CorpusStats stats;
  stats.users = users_.size();
  stats.items = items_.size();
  stats.reviews = reviews_.size();
  stats.sentences = sentences_.size();
  std::set<AttributeIndex> seen;
  for (const auto& s : sentences_) seen.insert(s.attributes.begin(), s.attributes.end());
  stats.attributes = seen.size();
  return stats;
}

Corpus Preprocess(const std::filesystem::path& reviews_path,
                  const AttributeLexicon& lexicon, const CorpusOptions& options,
                  PreprocessReport* report) {
  IngestResult ingested = IngestReviews(reviews_path, options.rating_threshold);
  PreprocessReport local;
  local.records_read = ingested.reviews.size() + ingested.dropped_by_rating;
  local.malformed_records = ingested.errors.size();
  local.dropped_by_rating = ingested.dropped_by_rating;

  ReviewSet tagged = SegmentAndTag(std::move(ingested.reviews), lexicon, &local.segmentation);
  ReviewSet active = FilterMinActivity(std::move(tagged), options.min_activity);
  local.reviews_after_activity_filter = active.size();
  if (report) *report = local;
  return Corpus::Build(active, lexicon, options);
}

}  // namespace graphex::corpus
