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

#include "graphex/metrics/ngram.h"

#include <algorithm>

#include "graphex/common/error.h"

namespace graphex::metrics {

NgramProfile::NgramProfile(std::span<const TokenId> tokens, int max_order) {
  if (max_order < 1 || max_order > kMaxOrder) throw Error("n-gram order out of range");
  const int len = static_cast<int>(tokens.size());
  for (int n = 1; n <= max_order; ++n) {
    for (int i = 0; i + n <= len; ++i) {
      ++counts_[n - 1][std::vector<TokenId>(tokens.begin() + i, tokens.begin() + i + n)];
    }
    totals_[n - 1] = std::max(0, len - n + 1);
  }
}

int NgramProfile::Count(const std::vector<TokenId>& gram) const {
  const auto& m = counts_[gram.size() - 1];
  auto it = m.find(gram);
  return it == m.end() ? 0 : it->second;
}

int ClippedMatches(const NgramProfile& candidate, const NgramProfile& reference, int n) {
  int matched = 0;
  for (const auto& [gram, count] : candidate.Order(n)) {
    matched += std::min(count, reference.Count(gram));
  }
  return matched;
}

}  // namespace graphex::metrics
