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

#include "graphex/metrics/attribute.h"

#include <algorithm>
#include <iterator>

namespace graphex::metrics {

namespace {

void SortUnique(std::vector<AttributeIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Prf AttributePrf(std::vector<AttributeIndex> predicted, std::vector<AttributeIndex> truth) {
  SortUnique(predicted);
  SortUnique(truth);
  std::vector<AttributeIndex> common;
  std::set_intersection(predicted.begin(), predicted.end(), truth.begin(), truth.end(),
                        std::back_inserter(common));
  Prf out;
  const auto hit = static_cast<double>(common.size());
  out.precision = predicted.empty() ? 0.0 : hit / static_cast<double>(predicted.size());
  out.recall = truth.empty() ? 0.0 : hit / static_cast<double>(truth.size());
  out.f1 = HarmonicMean(out.precision, out.recall);
  return out;
}

void AttributeAverager::Add(const std::vector<AttributeIndex>& predicted,
                            const std::vector<AttributeIndex>& truth) {
  if (truth.empty()) {
    ++excluded_;
    return;
  }
  const Prf prf = AttributePrf(predicted, truth);
  p_sum_ += prf.precision;
  r_sum_ += prf.recall;
  f_sum_ += prf.f1;
  ++counted_;
}

Prf AttributeAverager::Mean() const {
  if (counted_ == 0) return {};
  const auto n = static_cast<double>(counted_);
  return {p_sum_ / n, r_sum_ / n, f_sum_ / n};
}

}  // namespace graphex::metrics
