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

#ifndef GRAPHEX_TRAINING_LOSSES_H_
#define GRAPHEX_TRAINING_LOSSES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace graphex::training {

// Targets closer than this count as ties.
inline constexpr double kTieTolerance = 1e-6;

struct LossValue {
  double value = 0.0;
  Eigen::VectorXd grad;  // dvalue / dinput
};

using IndexPair = std::pair<int, int>;

// Unordered pairs (i < j) whose targets differ by more than kTieTolerance,
// in lexicographic order.
std::vector<IndexPair> EligiblePairs(const std::vector<double>& targets);

// All eligible pairs when there are at most `budget` of them or `all_pairs`
// is set; otherwise `budget` draws with replacement, seeded.
std::vector<IndexPair> SamplePairs(const std::vector<double>& targets, int budget,
                                   bool all_pairs, uint64_t seed);

// Mean over pairs of -log sigmoid(sign(r_i - r_j) * (g_i - g_j)); tied pairs
// contribute 0. Zero for an empty pair list.
LossValue PairwiseRankLoss(const Eigen::VectorXd& scores, const std::vector<double>& targets,
                           const std::vector<IndexPair>& pairs);

// Mean over attributes of -y log p, plus -(1 - y) log(1 - p) when `balanced`.
// Throws Error when a needed log argument is 0 or p is outside [0, 1].
LossValue AttributeLoss(const Eigen::VectorXd& probs, const std::vector<double>& labels,
                        bool balanced);

// lambda * ls + (1 - lambda) * lf. Throws Error for lambda outside [0, 1].
double CombinedLoss(double ls, double lf, double lambda);

}  // namespace graphex::training

#endif  // GRAPHEX_TRAINING_LOSSES_H_
