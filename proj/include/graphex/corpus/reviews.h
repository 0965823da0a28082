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

#ifndef GRAPHEX_CORPUS_REVIEWS_H_
#define GRAPHEX_CORPUS_REVIEWS_H_

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/corpus/lexicon.h"
#include "graphex/corpus/text.h"

namespace graphex::corpus {

struct TaggedSentence {
  Words words;
  std::vector<AttributeIndex> attributes;  // sorted, non-empty once tagged
};

// A review between ingestion and corpus finalization. Ids are still the raw
// strings from the input file.
struct ReviewRecord {
  std::string user_id;
  std::string item_id;
  double rating = 0.0;
  int source_line = 0;  // 1-based line in the input file
  std::string text;
  std::vector<TaggedSentence> sentences;
};

using ReviewSet = std::vector<ReviewRecord>;

struct RecordError {
  int line = 0;
  std::string message;
};

struct IngestResult {
  ReviewSet reviews;
  std::vector<RecordError> errors;
  size_t dropped_by_rating = 0;
};

// Reads JSON-lines records with fields user_id, item_id, rating, text and
// keeps those with rating strictly greater than `rating_threshold`.
// Malformed records are reported in `errors` and skipped. Throws IoError if
// the file cannot be opened.
IngestResult IngestReviews(const std::filesystem::path& path,
                           double rating_threshold);
IngestResult ParseReviews(std::istream& in, double rating_threshold);

// Attributes of `sentence` under `lexicon`; an empty result means the caller
// drops the sentence.
std::vector<AttributeIndex> TagAttributes(const Words& sentence,
                                          const AttributeLexicon& lexicon);

struct SegmentStats {
  size_t sentences_seen = 0;
  size_t sentences_dropped = 0;
  size_t reviews_dropped = 0;
};

// Segments every review's text, tags sentences and drops attribute-free
// sentences, then reviews left with no sentences.
ReviewSet SegmentAndTag(ReviewSet reviews, const AttributeLexicon& lexicon,
                        SegmentStats* stats = nullptr);

// Removes users and items with fewer than `min_count` reviews, repeating
// until no violator remains. Throws ConfigError if min_count < 1.
ReviewSet FilterMinActivity(ReviewSet reviews, int min_count);

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_REVIEWS_H_
