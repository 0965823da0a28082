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

#ifndef GRAPHEX_SELECTOR_TFIDF_H_
#define GRAPHEX_SELECTOR_TFIDF_H_

#include <cstddef>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "graphex/common/types.h"

namespace graphex::corpus {
class Corpus;
}

namespace graphex::selector {

// idf(t) = max(0, ln(N / (1 + df(t)))) over a document collection.
class IdfTable {
 public:
  IdfTable() = default;
  static IdfTable Build(const std::vector<const TokenSeq*>& documents);
  // Every sentence of the training split is one document.
  static IdfTable FromTrainingSplit(const corpus::Corpus& corpus);

  // Tokens absent from the collection weigh 0.
  double Idf(TokenId token) const;
  size_t documents() const { return documents_; }

 private:
  size_t documents_ = 0;
  std::unordered_map<TokenId, double> idf_;
};

// Sparse tf-idf vector (raw term counts times idf), unit length, sorted by
// token. Empty when every weight is 0.
using SparseVector = std::vector<std::pair<TokenId, double>>;
SparseVector TfidfVector(const TokenSeq& tokens, const IdfTable& idf);
double SparseDot(const SparseVector& a, const SparseVector& b);

// Symmetric cosine-similarity matrix with a zero diagonal. Sentences without
// any weighted token have similarity 0 to everything.
Eigen::MatrixXd TfidfCosineMatrix(const std::vector<const TokenSeq*>& sentences,
                                  const IdfTable& idf);

}  // namespace graphex::selector

#endif  // GRAPHEX_SELECTOR_TFIDF_H_
