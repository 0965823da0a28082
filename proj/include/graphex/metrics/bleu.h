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

#ifndef GRAPHEX_METRICS_BLEU_H_
#define GRAPHEX_METRICS_BLEU_H_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/metrics/ngram.h"

namespace graphex::metrics {

enum class Smoothing {
  kNone,
  // Orders n >= 2 with no clipped match use (0 + 1) / (total + 1). A
  // candidate without any unigram match still scores 0.
  kAddOneZeroOrders,
};

// Sufficient statistics for BLEU; additive across sentences.
struct BleuStats {
  std::array<int64_t, kMaxOrder> matches{};
  std::array<int64_t, kMaxOrder> totals{};
  int64_t candidate_length = 0;
  int64_t reference_length = 0;

  BleuStats& operator+=(const BleuStats& o);
};

// Clipping uses the per-n-gram maximum count over references; the reference
// length is the one closest to the candidate length (shorter on ties).
BleuStats ComputeBleuStats(const TokenSeq& candidate,
                           const std::vector<TokenSeq>& references, int max_n);

// Geometric mean of the first max_n modified precisions times the brevity
// penalty exp(1 - r/c) (applied when c < r).
double BleuFromStats(const BleuStats& stats, int max_n, Smoothing smoothing);

// Smoothed sentence-level BLEU. An empty candidate scores 0.
double SentenceBleu(const TokenSeq& candidate, const std::vector<TokenSeq>& references,
                    int max_n = 4, Smoothing smoothing = Smoothing::kAddOneZeroOrders);

using BleuPair = std::pair<TokenSeq, std::vector<TokenSeq>>;

// Corpus-level BLEU over pooled statistics. Returns 0 for an empty corpus.
double CorpusBleu(const std::vector<BleuPair>& pairs, int max_n,
                  Smoothing smoothing = Smoothing::kNone);

}  // namespace graphex::metrics

#endif  // GRAPHEX_METRICS_BLEU_H_
