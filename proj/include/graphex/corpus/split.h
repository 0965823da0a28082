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

#ifndef GRAPHEX_CORPUS_SPLIT_H_
#define GRAPHEX_CORPUS_SPLIT_H_

#include <array>
#include <cstdint>
#include <vector>

#include "graphex/common/types.h"

namespace graphex::corpus {

enum class Partition : uint8_t { kTrain = 0, kValid = 1, kTest = 2 };

struct SplitRatios {
  double train = 0.70;
  double valid = 0.15;
  double test = 0.15;
};

struct CorpusSplit {
  uint64_t seed = 0;
  SplitRatios ratios;
  std::vector<ReviewIndex> train;
  std::vector<ReviewIndex> valid;
  std::vector<ReviewIndex> test;

  bool operator==(const CorpusSplit& o) const {
    return seed == o.seed && train == o.train && valid == o.valid && test == o.test;
  }
};

// Random partition of review indices [0, num_reviews). Valid and test sizes
// are floor(n * ratio); the remainder goes to train. Each partition is
// sorted ascending. Throws ConfigError when the ratios do not sum to 1.
CorpusSplit SplitCorpus(size_t num_reviews, const SplitRatios& ratios,
                        uint64_t seed);

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_SPLIT_H_
