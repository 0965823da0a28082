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

#include "graphex/metrics/bleu.h"

#include <cmath>
#include <cstdlib>
#include <map>

#include "graphex/common/error.h"
#include "graphex/common/log.h"

namespace graphex::metrics {

BleuStats& BleuStats::operator+=(const BleuStats& o) {
  for (int n = 0; n < kMaxOrder; ++n) {
    matches[n] += o.matches[n];
    totals[n] += o.totals[n];
  }
  candidate_length += o.candidate_length;
  reference_length += o.reference_length;
  return *this;
}

BleuStats ComputeBleuStats(const TokenSeq& candidate,
                           const std::vector<TokenSeq>& references, int max_n) {
  if (max_n < 1 || max_n > kMaxOrder) throw Error("BLEU order out of range");
  BleuStats stats;
  stats.candidate_length = static_cast<int64_t>(candidate.size());
  const NgramProfile cand(candidate, max_n);

  std::vector<NgramProfile> refs;
  refs.reserve(references.size());
  for (const auto& r : references) refs.emplace_back(r, max_n);

  for (int n = 1; n <= max_n; ++n) {
    stats.totals[n - 1] = cand.Total(n);
    for (const auto& [gram, count] : cand.Order(n)) {
      int max_ref = 0;
      for (const auto& r : refs) max_ref = std::max(max_ref, r.Count(gram));
      stats.matches[n - 1] += std::min(count, max_ref);
    }
  }
  int64_t best = -1;
  for (const auto& r : references) {
    const auto len = static_cast<int64_t>(r.size());
    const int64_t diff = std::llabs(len - stats.candidate_length);
    const int64_t best_diff = std::llabs(best - stats.candidate_length);
    if (best < 0 || diff < best_diff || (diff == best_diff && len < best)) best = len;
  }
  stats.reference_length = std::max<int64_t>(best, 0);
  return stats;
}

double BleuFromStats(const BleuStats& stats, int max_n, Smoothing smoothing) {
  if (stats.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto m = static_cast<double>(stats.matches[n - 1]);
    const auto t = static_cast<double>(stats.totals[n - 1]);
    double p;
    if (m > 0) {
      p = m / t;
    } else if (smoothing == Smoothing::kAddOneZeroOrders && n >= 2) {
      p = 1.0 / (t + 1.0);
    } else {
      return 0.0;
    }
    log_sum += std::log(p);
  }
  const auto c = static_cast<double>(stats.candidate_length);
  const auto r = static_cast<double>(stats.reference_length);
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::exp(log_sum / max_n);
}

double SentenceBleu(const TokenSeq& candidate, const std::vector<TokenSeq>& references,
                    int max_n, Smoothing smoothing) {
  if (candidate.empty()) {
    Logger()->warn("sentence BLEU of an empty candidate is 0");
    return 0.0;
  }
  return BleuFromStats(ComputeBleuStats(candidate, references, max_n), max_n, smoothing);
}

double CorpusBleu(const std::vector<BleuPair>& pairs, int max_n, Smoothing smoothing) {
  BleuStats total;
  for (const auto& [cand, refs] : pairs) total += ComputeBleuStats(cand, refs, max_n);
  return BleuFromStats(total, max_n, smoothing);
}

}  // namespace graphex::metrics
