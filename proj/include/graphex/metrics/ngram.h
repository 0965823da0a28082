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

#ifndef GRAPHEX_METRICS_NGRAM_H_
#define GRAPHEX_METRICS_NGRAM_H_

#include <array>
#include <map>
#include <span>
#include <vector>

#include "graphex/common/types.h"

namespace graphex::metrics {

inline constexpr int kMaxOrder = 4;

// n-gram -> count for orders 1..max_order. Only positive counts are stored.
class NgramProfile {
 public:
  NgramProfile(std::span<const TokenId> tokens, int max_order);

  const std::map<std::vector<TokenId>, int>& Order(int n) const { return counts_[n - 1]; }
  // Number of n-grams of order n in the source sequence.
  int Total(int n) const { return totals_[n - 1]; }
  int Count(const std::vector<TokenId>& gram) const;

 private:
  std::array<std::map<std::vector<TokenId>, int>, kMaxOrder> counts_;
  std::array<int, kMaxOrder> totals_{};
};

// Clipped overlap: sum over candidate n-grams of min(cand count, ref count).
int ClippedMatches(const NgramProfile& candidate, const NgramProfile& reference, int n);

}  // namespace graphex::metrics

#endif  // GRAPHEX_METRICS_NGRAM_H_
