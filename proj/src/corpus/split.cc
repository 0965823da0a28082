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

#include "graphex/corpus/split.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphex/common/error.h"

namespace graphex::corpus {

CorpusSplit SplitCorpus(size_t num_reviews, const SplitRatios& ratios,
                        uint64_t seed) {
  const double sum = ratios.train + ratios.valid + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9 || ratios.train < 0 || ratios.valid < 0 ||
      ratios.test < 0) {
    throw ConfigError("split ratios must be non-negative and sum to 1");
  }
  std::vector<ReviewIndex> order(num_reviews);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with raw mt19937_64 draws; std::shuffle and the standard
  // distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  for (size_t i = num_reviews; i > 1; --i) {
    const size_t j = rng() % i;
    std::swap(order[i - 1], order[j]);
  }
  const auto n = static_cast<double>(num_reviews);
  const auto n_valid = static_cast<size_t>(std::floor(n * ratios.valid + 1e-9));
  const auto n_test = static_cast<size_t>(std::floor(n * ratios.test + 1e-9));

  CorpusSplit split;
  split.seed = seed;
  split.ratios = ratios;
  split.valid.assign(order.begin(), order.begin() + n_valid);
  split.test.assign(order.begin() + n_valid, order.begin() + n_valid + n_test);
  split.train.assign(order.begin() + n_valid + n_test, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.valid.begin(), split.valid.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

}  // namespace graphex::corpus
