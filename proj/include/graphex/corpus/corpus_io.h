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

#ifndef GRAPHEX_CORPUS_CORPUS_IO_H_
#define GRAPHEX_CORPUS_CORPUS_IO_H_

#include <filesystem>

#include "graphex/corpus/corpus.h"

namespace graphex::corpus {

// Directory layout:
//   vocab.tsv         token<TAB>id
//   token_counts.tsv  token<TAB>training count
//   users.tsv         index<TAB>raw user id
//   items.tsv         index<TAB>raw item id
//   attributes.tsv    index<TAB>surface (plus match mode in split.json)
//   reviews.tsv       review, user, item, rating, source line, sentence ids
//   sentences.tsv     sentence, review, attribute ids, token ids, text
//   split.json        seed, ratios, train/valid/test review ids
//   stats.json        users, items, reviews, sentences, attributes
// All files are written deterministically; saving the same corpus twice
// produces identical bytes.
void SaveCorpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus LoadCorpus(const std::filesystem::path& dir);

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_CORPUS_IO_H_
