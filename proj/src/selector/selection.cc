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

#include "graphex/selector/selection.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphex/common/error.h"
#include "graphex/common/log.h"

namespace graphex::selector {

namespace {

constexpr double kImprovement = 1e-12;

// Indices of candidates sorted by descending score, ties by index.
std::vector<int> ByScore(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return order;
}

class BranchAndBound {
 public:
  BranchAndBound(const SelectionProblem& p, int64_t max_nodes)
      : p_(p), n_(p.n()), k_(p.target_size()), max_nodes_(max_nodes), penalty_(n_, 0.0) {}

  // Returns false when the node budget ran out.
  bool Run() {
    Visit(0, 0.0);
    return nodes_ <= max_nodes_;
  }
  const std::vector<int>& best() const { return best_; }

 private:
  void Visit(int next, double value) {
    if (++nodes_ > max_nodes_) return;
    const int need = k_ - static_cast<int>(current_.size());
    if (need == 0) {
      if (best_.empty() || value > best_value_ + kImprovement) {
        best_ = current_;
        best_value_ = value;
      }
      return;
    }
    if (n_ - next < need) return;
    if (!best_.empty() && Bound(next, need, value) <= best_value_ + kImprovement) return;

    // Include `next` first so complete sets are reached in lexicographic order.
    const double gain = p_.scores[next] - penalty_[next];
    current_.push_back(next);
    for (int j = 0; j < n_; ++j) penalty_[j] += 2.0 * p_.alpha * p_.sim(next, j);
    Visit(next + 1, value + gain);
    for (int j = 0; j < n_; ++j) penalty_[j] -= 2.0 * p_.alpha * p_.sim(next, j);
    current_.pop_back();

    Visit(next + 1, value);
  }

  // value + sum of the `need` largest marginal gains among [next, n). Pair
  // penalties between candidates not yet chosen only lower the true value.
  double Bound(int next, int need, double value) {
    top_.assign(need, -INFINITY);
    for (int j = next; j < n_; ++j) {
      const double m = p_.scores[j] - penalty_[j];
      if (m > top_.back()) {
        auto it = std::upper_bound(top_.begin(), top_.end(), m, std::greater<>());
        top_.insert(it, m);
        top_.pop_back();
      }
    }
    for (double m : top_) value += m;
    return value;
  }

  const SelectionProblem& p_;
  const int n_;
  const int k_;
  const int64_t max_nodes_;
  int64_t nodes_ = 0;
  std::vector<double> penalty_;
  std::vector<int> current_;
  std::vector<int> best_;
  double best_value_ = 0.0;
  std::vector<double> top_;
};

}  // namespace

int SelectionProblem::target_size() const { return std::min(k, n()); }

void SelectionProblem::Validate() const {
  if (k < 1) throw Error("selection size K must be at least 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error("alpha must be finite and >= 0");
  if (sim.rows() != n() || sim.cols() != n()) throw Error("similarity matrix must be n x n");
  for (int i = 0; i < n(); ++i) {
    if (!std::isfinite(scores[i])) throw Error("candidate scores must be finite");
    if (sim(i, i) != 0.0) throw Error("similarity diagonal must be zero");
    for (int j = i + 1; j < n(); ++j) {
      if (sim(i, j) != sim(j, i)) throw Error("similarity matrix must be symmetric");
      if (!(sim(i, j) >= 0.0 && sim(i, j) <= 1.0)) throw Error("similarity outside [0, 1]");
    }
  }
}

std::string_view SolverKindName(SolverKind kind) {
  return kind == SolverKind::kExact ? "exact" : "greedy";
}

double Objective(const SelectionProblem& problem, const std::vector<int>& chosen) {
  double value = 0.0;
  for (int i : chosen) value += problem.scores[i];
  for (size_t a = 0; a < chosen.size(); ++a) {
    for (size_t b = a + 1; b < chosen.size(); ++b) {
      value -= 2.0 * problem.alpha * problem.sim(chosen[a], chosen[b]);
    }
  }
  return value;
}

Selection SolveExhaustive(const SelectionProblem& problem) {
  problem.Validate();
  if (problem.n() > kExhaustiveCap) throw Error("exhaustive solver limited to 20 candidates");
  Selection out;
  const int n = problem.n();
  const int k = problem.target_size();
  if (k == 0) return out;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  bool have = false;
  while (true) {
    const double v = Objective(problem, comb);
    if (!have || v > out.objective + kImprovement) {
      out.chosen = comb;
      out.objective = v;
      have = true;
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

Selection SolveGreedy(const SelectionProblem& problem) {
  problem.Validate();
  Selection out;
  out.solver = SolverKind::kGreedy;
  const int n = problem.n();
  std::vector<double> penalty(n, 0.0);
  std::vector<bool> used(n, false);
  for (int step = 0; step < problem.target_size(); ++step) {
    int pick = -1;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double gain = problem.scores[i] - penalty[i];
      if (pick < 0 || gain > best) {
        pick = i;
        best = gain;
      }
    }
    used[pick] = true;
    out.chosen.push_back(pick);
    for (int j = 0; j < n; ++j) penalty[j] += 2.0 * problem.alpha * problem.sim(pick, j);
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  out.objective = Objective(problem, out.chosen);
  return out;
}

Selection SolveExact(const SelectionProblem& problem, const ExactOptions& options) {
  problem.Validate();
  if (problem.n() > options.exact_cap) {
    Logger()->warn("{} candidates exceed the exact-solver cap {}; using greedy", problem.n(),
                   options.exact_cap);
    return SolveGreedy(problem);
  }
  Selection out;
  if (problem.target_size() == 0) return out;
  BranchAndBound bb(problem, options.max_nodes);
  if (!bb.Run()) {
    Logger()->warn("branch and bound exhausted its node budget on {} candidates; using greedy",
                   problem.n());
    return SolveGreedy(problem);
  }
  out.chosen = bb.best();
  out.objective = Objective(problem, out.chosen);
  return out;
}

PairSelection SelectForPair(const std::vector<SentenceIndex>& candidates,
                            const std::vector<double>& scores,
                            const std::vector<const TokenSeq*>& tokens, const IdfTable& idf,
                            const SelectorConfig& config) {
  if (candidates.size() != scores.size() || candidates.size() != tokens.size()) {
    throw Error("candidate, score and token lists differ in length");
  }
  PairSelection out;
  if (candidates.empty()) {
    Logger()->warn("empty candidate pool; nothing selected");
    return out;
  }
  std::vector<int> keep = ByScore(scores);
  if (static_cast<int>(keep.size()) > config.pool) keep.resize(config.pool);
  std::sort(keep.begin(), keep.end());

  SelectionProblem problem;
  problem.k = config.k;
  problem.alpha = config.use_ilp ? config.alpha : 0.0;
  std::vector<const TokenSeq*> kept_tokens;
  for (int i : keep) {
    problem.scores.push_back(scores[i]);
    kept_tokens.push_back(tokens[i]);
  }
  problem.sim = TfidfCosineMatrix(kept_tokens, idf);

  const Selection sel =
      config.use_ilp ? SolveExact(problem, {.exact_cap = config.exact_cap}) : SolveGreedy(problem);
  std::vector<int> order = sel.chosen;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return problem.scores[a] > problem.scores[b]; });
  for (int i : order) out.sentences.push_back(candidates[keep[i]]);
  out.objective = sel.objective;
  out.solver = sel.solver;
  return out;
}

}  // namespace graphex::selector
