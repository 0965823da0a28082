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

#ifndef GRAPHEX_METRICS_ATTRIBUTE_H_
#define GRAPHEX_METRICS_ATTRIBUTE_H_

#include <cstddef>
#include <vector>

#include "graphex/common/types.h"
#include "graphex/metrics/rouge.h"

namespace graphex::metrics {

// Set overlap between predicted and ground-truth attributes. Inputs need not be
// sorted or unique. Precision is 0 for an empty prediction.
Prf AttributePrf(std::vector<AttributeIndex> predicted, std::vector<AttributeIndex> truth);

// Macro average over pairs. Pairs whose truth set is empty are excluded and
// counted separately.
class AttributeAverager {
 public:
  void Add(const std::vector<AttributeIndex>& predicted, const std::vector<AttributeIndex>& truth);
  Prf Mean() const;
  size_t counted() const { return counted_; }
  size_t excluded() const { return excluded_; }

 private:
  double p_sum_ = 0.0, r_sum_ = 0.0, f_sum_ = 0.0;
  size_t counted_ = 0;
  size_t excluded_ = 0;
};

}  // namespace graphex::metrics

#endif  // GRAPHEX_METRICS_ATTRIBUTE_H_
