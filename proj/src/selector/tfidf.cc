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

#include "graphex/selector/tfidf.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "graphex/common/log.h"
#include "graphex/corpus/corpus.h"

namespace graphex::selector {

IdfTable IdfTable::Build(const std::vector<const TokenSeq*>& documents) {
  IdfTable t;
  t.documents_ = documents.size();
  std::unordered_map<TokenId, size_t> df;
  for (const TokenSeq* doc : documents) {
    TokenSeq uniq = *doc;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (TokenId tok : uniq) ++df[tok];
  }
  const auto n = static_cast<double>(t.documents_);
  for (const auto& [tok, count] : df) {
    t.idf_[tok] = std::max(0.0, std::log(n / (1.0 + static_cast<double>(count))));
  }
  return t;
}

IdfTable IdfTable::FromTrainingSplit(const corpus::Corpus& corpus) {
  std::vector<const TokenSeq*> docs;
  for (ReviewIndex r : corpus.split().train) {
    for (SentenceIndex s : corpus.review(r).sentences) docs.push_back(&corpus.sentence(s).tokens);
  }
  return Build(docs);
}

double IdfTable::Idf(TokenId token) const {
  auto it = idf_.find(token);
  return it == idf_.end() ? 0.0 : it->second;
}

SparseVector TfidfVector(const TokenSeq& tokens, const IdfTable& idf) {
  std::map<TokenId, int> tf;
  for (TokenId t : tokens) ++tf[t];
  SparseVector v;
  double norm = 0.0;
  for (const auto& [tok, count] : tf) {
    const double w = count * idf.Idf(tok);
    if (w > 0.0) {
      v.emplace_back(tok, w);
      norm += w * w;
    }
  }
  norm = std::sqrt(norm);
  for (auto& [tok, w] : v) w /= norm;
  return v;
}

double SparseDot(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return dot;
}

Eigen::MatrixXd TfidfCosineMatrix(const std::vector<const TokenSeq*>& sentences,
                                  const IdfTable& idf) {
  const auto n = static_cast<Eigen::Index>(sentences.size());
  std::vector<SparseVector> vecs;
  vecs.reserve(sentences.size());
  size_t zero = 0;
  for (const TokenSeq* s : sentences) {
    vecs.push_back(TfidfVector(*s, idf));
    if (vecs.back().empty()) ++zero;
  }
  if (zero > 0) Logger()->warn("{} sentence(s) have an all-zero tf-idf vector", zero);
  Eigen::MatrixXd sim = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = std::clamp(SparseDot(vecs[i], vecs[j]), 0.0, 1.0);
      sim(i, j) = v;
      sim(j, i) = v;
    }
  }
  return sim;
}

}  // namespace graphex::selector
