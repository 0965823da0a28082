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

#include "graphex/metrics/rouge.h"

#include <algorithm>

#include "graphex/common/error.h"
#include "graphex/metrics/ngram.h"

namespace graphex::metrics {

double HarmonicMean(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

namespace {

Prf FromCounts(double matched, double cand_total, double ref_total) {
  Prf out;
  out.precision = cand_total > 0 ? matched / cand_total : 0.0;
  out.recall = ref_total > 0 ? matched / ref_total : 0.0;
  out.f1 = HarmonicMean(out.precision, out.recall);
  return out;
}

}  // namespace

Prf RougeN(const TokenSeq& candidate, const TokenSeq& reference, int n) {
  if (n < 1 || n > kMaxOrder) throw Error("ROUGE order out of range");
  const NgramProfile cand(candidate, n);
  const NgramProfile ref(reference, n);
  return FromCounts(ClippedMatches(cand, ref, n), cand.Total(n), ref.Total(n));
}

int LcsLength(const TokenSeq& a, const TokenSeq& b) {
  std::vector<int> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

Prf RougeL(const TokenSeq& candidate, const TokenSeq& reference) {
  return FromCounts(LcsLength(candidate, reference), static_cast<double>(candidate.size()),
                    static_cast<double>(reference.size()));
}

double RougeNF1(const TokenSeq& candidate, const std::vector<TokenSeq>& references, int n) {
  double best = 0.0;
  for (const auto& r : references) best = std::max(best, RougeN(candidate, r, n).f1);
  return best;
}

double RougeLF1(const TokenSeq& candidate, const std::vector<TokenSeq>& references) {
  double best = 0.0;
  for (const auto& r : references) best = std::max(best, RougeL(candidate, r).f1);
  return best;
}

}  // namespace graphex::metrics
