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

#ifndef GRAPHEX_SELECTOR_SELECTION_H_
#define GRAPHEX_SELECTOR_SELECTION_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "graphex/common/types.h"
#include "graphex/selector/tfidf.h"

namespace graphex::selector {

// Choose K of n candidates maximizing
//   sum_{i in S} g_i - alpha * sum_{i != j in S} sim(i, j)
// where the pair sum runs over ordered pairs.
struct SelectionProblem {
  std::vector<double> scores;
  Eigen::MatrixXd sim;  // symmetric, zero diagonal, entries in [0, 1]
  int k = 5;
  double alpha = 2.0;

  int n() const { return static_cast<int>(scores.size()); }
  // Number of items a feasible selection holds: min(k, n).
  int target_size() const;
  // Throws Error when shapes, symmetry, ranges or k are invalid.
  void Validate() const;
};

enum class SolverKind { kExact, kGreedy };
std::string_view SolverKindName(SolverKind kind);

struct Selection {
  std::vector<int> chosen;  // ascending problem indices
  double objective = 0.0;
  SolverKind solver = SolverKind::kExact;
};

double Objective(const SelectionProblem& problem, const std::vector<int>& chosen);

// Enumerates every subset of size target_size() in lexicographic order.
inline constexpr int kExhaustiveCap = 20;
Selection SolveExhaustive(const SelectionProblem& problem);

struct ExactOptions {
  int exact_cap = 100;
  // Branch-and-bound node budget; exceeding it downgrades to greedy.
  int64_t max_nodes = 50'000'000;
};

// Depth-first branch and bound in index order. Among optimal sets the
// lexicographically smallest is returned. Falls back to greedy (with a
// warning) above exact_cap or past the node budget.
Selection SolveExact(const SelectionProblem& problem, const ExactOptions& options = {});

// Repeatedly adds the candidate with the largest marginal gain
// g_i - 2 * alpha * sum_{j in S} sim(i, j); ties go to the smaller index.
Selection SolveGreedy(const SelectionProblem& problem);

struct SelectorConfig {
  int k = 5;
  double alpha = 2.0;
  int pool = 100;
  int exact_cap = 100;
  // When false, candidates are taken in descending score order.
  bool use_ilp = true;
};

struct PairSelection {
  std::vector<SentenceIndex> sentences;  // descending score, ties by id
  double objective = 0.0;
  SolverKind solver = SolverKind::kExact;
};

// Keeps the `pool` best-scoring candidates (ties by position), builds the
// tf-idf similarity matrix and solves. `candidates` and `scores` are
// parallel; `tokens[i]` holds the tokens of candidates[i].
PairSelection SelectForPair(const std::vector<SentenceIndex>& candidates,
                            const std::vector<double>& scores,
                            const std::vector<const TokenSeq*>& tokens, const IdfTable& idf,
                            const SelectorConfig& config);

}  // namespace graphex::selector

#endif  // GRAPHEX_SELECTOR_SELECTION_H_
