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

#ifndef GRAPHEX_METRICS_ROUGE_H_
#define GRAPHEX_METRICS_ROUGE_H_

#include <vector>

#include "graphex/common/types.h"

namespace graphex::metrics {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// F1 from precision and recall; 0 when both are 0.
double HarmonicMean(double p, double r);

// n-gram overlap with clipped counts. Precision is 0 when the candidate has
// fewer than n tokens, recall is 0 when the reference does.
Prf RougeN(const TokenSeq& candidate, const TokenSeq& reference, int n);
Prf RougeL(const TokenSeq& candidate, const TokenSeq& reference);

int LcsLength(const TokenSeq& a, const TokenSeq& b);

// Best F1 over references (0 when there are none).
double RougeNF1(const TokenSeq& candidate, const std::vector<TokenSeq>& references, int n);
double RougeLF1(const TokenSeq& candidate, const std::vector<TokenSeq>& references);

}  // namespace graphex::metrics

#endif  // GRAPHEX_METRICS_ROUGE_H_
