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

#ifndef GRAPHEX_TRAINING_RELEVANCE_H_
#define GRAPHEX_TRAINING_RELEVANCE_H_

#include <vector>

#include "graphex/common/types.h"

namespace graphex::training {

// r_i = max_j SentenceBleu(candidate_i, {ground_truth_j}) with the default
// smoothing. Returns an empty vector when `ground_truth` is empty.
std::vector<double> RelevanceTargets(const std::vector<const TokenSeq*>& candidates,
                                     const std::vector<TokenSeq>& ground_truth);

}  // namespace graphex::training

#endif  // GRAPHEX_TRAINING_RELEVANCE_H_
