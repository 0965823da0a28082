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

#include "graphex/corpus/reviews.h"

#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "graphex/common/error.h"
#include "graphex/common/log.h"

namespace graphex::corpus {

namespace {

std::string IdField(const nlohmann::json& record, const char* name) {
  const auto& v = record.at(name);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  throw std::invalid_argument(std::string("field '") + name +
                              "' must be a string or integer");
}

}  // namespace

IngestResult ParseReviews(std::istream& in, double rating_threshold) {
  IngestResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      if (!record.is_object()) throw std::invalid_argument("record is not an object");
      ReviewRecord r;
      r.user_id = IdField(record, "user_id");
      r.item_id = IdField(record, "item_id");
      const auto& rating = record.at("rating");
      if (!rating.is_number()) throw std::invalid_argument("field 'rating' must be numeric");
      r.rating = rating.get<double>();
      r.text = record.at("text").get<std::string>();
      r.source_line = line_no;
      if (r.rating > rating_threshold) {
        result.reviews.push_back(std::move(r));
      } else {
        ++result.dropped_by_rating;
      }
    } catch (const std::exception& e) {
      result.errors.push_back({line_no, e.what()});
    }
  }
  return result;
}

IngestResult IngestReviews(const std::filesystem::path& path,
                           double rating_threshold) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read reviews: " + path.string());
  IngestResult result = ParseReviews(in, rating_threshold);
  for (const auto& e : result.errors) {
    Logger()->warn("{}:{}: skipped malformed record: {}", path.string(), e.line,
                   e.message);
  }
  return result;
}

std::vector<AttributeIndex> TagAttributes(const Words& sentence,
                                          const AttributeLexicon& lexicon) {
  return lexicon.Tag(sentence);
}

ReviewSet SegmentAndTag(ReviewSet reviews, const AttributeLexicon& lexicon,
                        SegmentStats* stats) {
  SegmentStats local;
  ReviewSet kept;
  kept.reserve(reviews.size());
  for (auto& review : reviews) {
    review.sentences.clear();
    for (auto& words : SegmentAndTokenize(review.text)) {
      ++local.sentences_seen;
      auto attributes = TagAttributes(words, lexicon);
      if (attributes.empty()) {
        ++local.sentences_dropped;
        continue;
      }
      review.sentences.push_back({std::move(words), std::move(attributes)});
    }
    if (review.sentences.empty()) {
      ++local.reviews_dropped;
      continue;
    }
    kept.push_back(std::move(review));
  }
  if (stats) *stats = local;
  return kept;
}

ReviewSet FilterMinActivity(ReviewSet reviews, int min_count) {
  if (min_count < 1) throw ConfigError("min_activity must be >= 1");
  while (true) {
    std::unordered_map<std::string, int> user_count, item_count;
    for (const auto& r : reviews) {
      ++user_count[r.user_id];
      ++item_count[r.item_id];
    }
    ReviewSet kept;
    kept.reserve(reviews.size());
    for (auto& r : reviews) {
      if (user_count[r.user_id] >= min_count && item_count[r.item_id] >= min_count) {
        kept.push_back(std::move(r));
      }
    }
    const bool stable = kept.size() == reviews.size();
    reviews = std::move(kept);
    if (stable) break;
  }
  if (reviews.empty()) {
    Logger()->warn("activity filter (min {}) removed every review", min_count);
  }
  return reviews;
}

}  // namespace graphex::corpus
