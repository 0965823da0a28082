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

#include "graphex/training/losses.h"

#include <cmath>
#include <random>

#include "graphex/common/error.h"

namespace graphex::training {

namespace {

int Sign(double d) {
  if (d > kTieTolerance) return 1;
  if (d < -kTieTolerance) return -1;
  return 0;
}

// log(1 + exp(x)) without overflow.
double Softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

std::vector<IndexPair> EligiblePairs(const std::vector<double>& targets) {
  std::vector<IndexPair> out;
  const int n = static_cast<int>(targets.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Sign(targets[i] - targets[j]) != 0) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<IndexPair> SamplePairs(const std::vector<double>& targets, int budget,
                                   bool all_pairs, uint64_t seed) {
  std::vector<IndexPair> eligible = EligiblePairs(targets);
  if (all_pairs || static_cast<int>(eligible.size()) <= budget) return eligible;
  std::mt19937_64 rng(seed);
  std::vector<IndexPair> out;
  out.reserve(budget);
  for (int b = 0; b < budget; ++b) out.push_back(eligible[rng() % eligible.size()]);
  return out;
}

LossValue PairwiseRankLoss(const Eigen::VectorXd& scores, const std::vector<double>& targets,
                           const std::vector<IndexPair>& pairs) {
  if (static_cast<size_t>(scores.size()) != targets.size()) {
    throw Error("score and target counts differ");
  }
  LossValue out;
  out.grad = Eigen::VectorXd::Zero(scores.size());
  if (pairs.empty()) return out;
  const double inv = 1.0 / static_cast<double>(pairs.size());
  for (const auto& [i, j] : pairs) {
    const int s = Sign(targets[i] - targets[j]);
    if (s == 0) continue;
    const double x = s * (scores[i] - scores[j]);
    out.value += Softplus(-x) * inv;
    // d/dx softplus(-x) = -sigmoid(-x)
    const double d = -Sigmoid(-x) * s * inv;
    out.grad[i] += d;
    out.grad[j] -= d;
  }
  return out;
}

LossValue AttributeLoss(const Eigen::VectorXd& probs, const std::vector<double>& labels,
                        bool balanced) {
  if (static_cast<size_t>(probs.size()) != labels.size()) {
    throw Error("probability and label counts differ");
  }
  LossValue out;
  out.grad = Eigen::VectorXd::Zero(probs.size());
  if (probs.size() == 0) return out;
  const double inv = 1.0 / static_cast<double>(probs.size());
  for (Eigen::Index f = 0; f < probs.size(); ++f) {
    const double p = probs[f];
    const double y = labels[f];
    if (!(p >= 0.0 && p <= 1.0)) throw Error("attribute probability outside [0, 1]");
    if (y > 0.0) {
      if (p == 0.0) throw Error("attribute probability saturated at 0 for a positive label");
      out.value -= y * std::log(p) * inv;
      out.grad[f] -= y / p * inv;
    }
    if (balanced && y < 1.0) {
      if (p == 1.0) throw Error("attribute probability saturated at 1 for a negative label");
      out.value -= (1.0 - y) * std::log1p(-p) * inv;
      out.grad[f] += (1.0 - y) / (1.0 - p) * inv;
    }
  }
  return out;
}

double CombinedLoss(double ls, double lf, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("lambda must lie in [0, 1]");
  return lambda * ls + (1.0 - lambda) * lf;
}

}  // namespace graphex::training
