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

#include "graphex/training/relevance.h"

#include <algorithm>

#include "graphex/metrics/bleu.h"

namespace graphex::training {

std::vector<double> RelevanceTargets(const std::vector<const TokenSeq*>& candidates,
                                     const std::vector<TokenSeq>& ground_truth) {
  if (ground_truth.empty()) return {};
  std::vector<double> r;
  r.reserve(candidates.size());
  std::vector<TokenSeq> one(1);
  for (const TokenSeq* c : candidates) {
    double best = 0.0;
    for (const TokenSeq& g : ground_truth) {
      one[0] = g;
      best = std::max(best, metrics::SentenceBleu(*c, one));
    }
    r.push_back(best);
  }
  return r;
}

}  // namespace graphex::training
