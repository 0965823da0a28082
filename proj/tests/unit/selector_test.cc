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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "graphex/common/error.h"
#include "graphex/common/parallel.h"
#include "graphex/selector/selection.h"
#include "graphex/selector/tfidf.h"
#include "oracles.h"

namespace graphex::selector {
namespace {

std::vector<const TokenSeq*> Ptrs(const std::vector<TokenSeq>& v) {
  std::vector<const TokenSeq*> out;
  for (const auto& t : v) out.push_back(&t);
  return out;
}

TEST(Tfidf, IdentityAndDisjoint) {
  const std::vector<TokenSeq> docs = {{1, 2}, {3, 4}, {5}, {6}};
  const IdfTable idf = IdfTable::Build(Ptrs(docs));
  const std::vector<TokenSeq> s = {{1, 2}, {1, 2}, {3, 4}};
  const Eigen::MatrixXd m = TfidfCosineMatrix(Ptrs(s), idf);
  EXPECT_NEAR(m(0, 1), 1.0, 1e-15);
  EXPECT_EQ(m(0, 2), 0.0);
  EXPECT_EQ(m(0, 0), 0.0);
}

TEST(Tfidf, HandComputedThreeSentences) {
  const std::vector<TokenSeq> docs = {{1, 2}, {1, 3}, {4}, {5}};
  const IdfTable idf = IdfTable::Build(Ptrs(docs));
  const double i1 = std::log(4.0 / 3), i2 = std::log(2.0), i3 = std::log(2.0);
  EXPECT_DOUBLE_EQ(idf.Idf(1), i1);
  EXPECT_DOUBLE_EQ(idf.Idf(2), i2);
  EXPECT_EQ(idf.Idf(99), 0.0);
  const std::vector<TokenSeq> s = {{1, 2}, {1, 3}, {2}};
  const Eigen::MatrixXd m = TfidfCosineMatrix(Ptrs(s), idf);
  EXPECT_NEAR(m(0, 1), i1 * i1 / std::sqrt((i1 * i1 + i2 * i2) * (i1 * i1 + i3 * i3)), 1e-12);
  EXPECT_NEAR(m(0, 2), i2 / std::sqrt(i1 * i1 + i2 * i2), 1e-12);
  EXPECT_EQ(m(1, 2), 0.0);
  EXPECT_TRUE(m.isApprox(oracle::TfidfCosine(s, docs), 1e-12));
}

TEST(Tfidf, IdfIsClampedAtZero) {
  // A token in every document has ln(N / (N + 1)) < 0.
  const std::vector<TokenSeq> docs = {{1}, {1, 2}};
  const IdfTable idf = IdfTable::Build(Ptrs(docs));
  EXPECT_EQ(idf.Idf(1), 0.0);
}

TEST(Tfidf, ZeroVectorSentenceIsOrthogonal) {
  const std::vector<TokenSeq> docs = {{1}, {2}, {3}};
  const IdfTable idf = IdfTable::Build(Ptrs(docs));
  const std::vector<TokenSeq> s = {{9, 9}, {9}, {1}};
  const Eigen::MatrixXd m = TfidfCosineMatrix(Ptrs(s), idf);
  EXPECT_TRUE(m.row(0).isZero(0.0));
  EXPECT_TRUE(m.row(1).isZero(0.0));
}

TEST(Tfidf, MatchesOracleOnRandomSentences) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TokenSeq> docs(10), s(6);
    for (auto* set : {&docs, &s}) {
      for (auto& t : *set) {
        t.resize(1 + rng() % 6);
        for (auto& x : t) x = static_cast<TokenId>(rng() % 10);
      }
    }
    const Eigen::MatrixXd m = TfidfCosineMatrix(Ptrs(s), IdfTable::Build(Ptrs(docs)));
    const Eigen::MatrixXd o = oracle::TfidfCosine(s, docs);
    EXPECT_LT((m - o).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(m.isApprox(m.transpose()));
  }
}

SelectionProblem Problem(std::vector<double> g, Eigen::MatrixXd sim, int k, double alpha) {
  SelectionProblem p;
  p.scores = std::move(g);
  p.sim = std::move(sim);
  p.k = k;
  p.alpha = alpha;
  return p;
}

SelectionProblem Derived() {
  Eigen::Matrix3d sim;
  sim << 0, 0.9, 0.0, 0.9, 0, 0.1, 0.0, 0.1, 0;
  return Problem({0.9, 0.8, 0.5}, sim, 2, 0.5);
}

TEST(Objective, Examples) {
  const SelectionProblem p = Derived();
  EXPECT_NEAR(Objective(p, {0, 1}), 0.8, 1e-12);
  EXPECT_NEAR(Objective(p, {0, 2}), 1.4, 1e-12);
  EXPECT_NEAR(Objective(p, {1, 2}), 1.2, 1e-12);
  EXPECT_DOUBLE_EQ(Objective(p, {1}), 0.8);
  SelectionProblem zero = p;
  zero.alpha = 0.0;
  EXPECT_DOUBLE_EQ(Objective(zero, {0, 1}), 0.9 + 0.8);
}

TEST(SolveExact, DerivedInstance) {
  const Selection s = SolveExact(Derived());
  EXPECT_EQ(s.chosen, (std::vector<int>{0, 2}));
  EXPECT_NEAR(s.objective, 1.4, 1e-12);
  EXPECT_EQ(s.solver, SolverKind::kExact);
  EXPECT_EQ(SolveGreedy(Derived()).chosen, (std::vector<int>{0, 2}));
}

TEST(SolveExact, KOneAndKAll) {
  SelectionProblem p = Derived();
  p.k = 1;
  EXPECT_EQ(SolveExact(p).chosen, (std::vector<int>{0}));
  EXPECT_EQ(SolveGreedy(p).chosen, SolveExact(p).chosen);
  p.k = 3;
  EXPECT_EQ(SolveExact(p).chosen, (std::vector<int>{0, 1, 2}));
  p.k = 7;  // more than n
  EXPECT_EQ(SolveExact(p).chosen, (std::vector<int>{0, 1, 2}));
}

TEST(SolveExact, TiesPickLexicographicallySmallest) {
  const Selection s = SolveExact(Problem({1, 1, 1, 1}, Eigen::MatrixXd::Zero(4, 4), 2, 2.0));
  EXPECT_EQ(s.chosen, (std::vector<int>{0, 1}));
}

TEST(SolveExact, RejectsInvalidProblems) {
  Eigen::Matrix2d asym;
  asym << 0, 0.5, 0.4, 0;
  EXPECT_THROW(SolveExact(Problem({1, 2}, asym, 1, 1.0)), Error);
  EXPECT_THROW(SolveExact(Problem({1, 2}, Eigen::MatrixXd::Zero(3, 3), 1, 1.0)), Error);
  EXPECT_THROW(SolveExact(Problem({1, 2}, Eigen::MatrixXd::Zero(2, 2), 0, 1.0)), Error);
}

TEST(SolveExact, CapDowngradesToGreedy) {
  SelectionProblem p = Problem(std::vector<double>(30, 1.0), Eigen::MatrixXd::Zero(30, 30), 3, 1.0);
  ExactOptions o;
  o.exact_cap = 10;
  EXPECT_EQ(SolveExact(p, o).solver, SolverKind::kGreedy);
}

SelectionProblem RandomProblem(std::mt19937_64& rng, int n, int k, double alpha) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> g(n);
  for (double& x : g) x = u(rng) * 2 - 0.5;
  Eigen::MatrixXd sim = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sim(i, j) = sim(j, i) = u(rng);
  }
  return Problem(g, sim, k, alpha);
}

TEST(SolveExact, MatchesEnumeration) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 4);
    const double alpha = std::array<double, 3>{0.0, 0.5, 2.0}[rng() % 3];
    const SelectionProblem p = RandomProblem(rng, n, k, alpha);
    const Selection exact = SolveExact(p);
    const Selection enumerated = SolveExhaustive(p);
    const oracle::Best best = oracle::BestSubset(p.scores, p.sim, k, alpha);
    EXPECT_NEAR(exact.objective, best.objective, 1e-9);
    EXPECT_NEAR(enumerated.objective, best.objective, 1e-9);
    EXPECT_NEAR(exact.objective, Objective(p, exact.chosen), 1e-12);
    EXPECT_LE(SolveGreedy(p).objective, exact.objective + 1e-12);
    EXPECT_EQ(static_cast<int>(exact.chosen.size()), std::min(n, k));
  }
}

TEST(SolveExact, ScoreShiftInvariance) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % 4);
    SelectionProblem p = RandomProblem(rng, n, k, 0.5);
    // Perturb away from near-ties so the argmax is well defined.
    const Selection before = SolveExact(p);
    const double c = 0.75;
    for (double& g : p.scores) g += c;
    const Selection after = SolveExact(p);
    EXPECT_EQ(after.chosen, before.chosen);
    EXPECT_NEAR(after.objective, before.objective + p.target_size() * c, 1e-9);
  }
}

TEST(SolveExact, ZeroAlphaIsTopK) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 4);
    SelectionProblem p = RandomProblem(rng, n, k, 0.0);
    for (double& g : p.scores) g = std::round(g * 4) / 4;  // force ties
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.scores[a] > p.scores[b]; });
    order.resize(p.target_size());
    std::sort(order.begin(), order.end());
    EXPECT_EQ(SolveExact(p).chosen, order);
    EXPECT_EQ(SolveGreedy(p).chosen, order);
  }
}

TEST(SolveExact, IndependentOfParallelism) {
  std::mt19937_64 rng(80);
  std::vector<SelectionProblem> problems;
  for (int i = 0; i < 40; ++i) problems.push_back(RandomProblem(rng, 12, 4, 2.0));
  std::vector<Selection> serial(problems.size()), parallel(problems.size());
  ParallelFor(problems.size(), 1, [&](size_t i) { serial[i] = SolveExact(problems[i]); });
  ParallelFor(problems.size(), 4, [&](size_t i) { parallel[i] = SolveExact(problems[i]); });
  for (size_t i = 0; i < problems.size(); ++i) {
    EXPECT_EQ(serial[i].chosen, parallel[i].chosen);
    EXPECT_EQ(serial[i].objective, parallel[i].objective);
  }
}

TEST(SelectForPair, DefaultsAndNoTruncation) {
  const SelectorConfig c;
  EXPECT_EQ(c.k, 5);
  EXPECT_EQ(c.alpha, 2.0);
  EXPECT_EQ(c.pool, 100);
  const std::vector<TokenSeq> toks = {{1}, {2}, {3}};
  const IdfTable idf = IdfTable::Build(Ptrs(toks));
  const PairSelection s = SelectForPair({10, 11, 12}, {0.1, 0.3, 0.2}, Ptrs(toks), idf, c);
  EXPECT_EQ(s.sentences, (std::vector<SentenceIndex>{11, 12, 10}));
}

TEST(SelectForPair, PoolTruncatesByScore) {
  const std::vector<TokenSeq> toks = {{1}, {2}, {3}, {4}};
  const IdfTable idf = IdfTable::Build(Ptrs(toks));
  SelectorConfig c;
  c.pool = 2;
  const PairSelection s = SelectForPair({10, 11, 12, 13}, {0.1, 0.4, 0.3, 0.2}, Ptrs(toks), idf, c);
  EXPECT_EQ(s.sentences, (std::vector<SentenceIndex>{11, 12}));
}

TEST(SelectForPair, DuplicateSelectedOnce) {
  // Sentences 0 and 1 are identical (sim 1); 2 * alpha * 1 > 0.9.
  const std::vector<TokenSeq> toks = {{1, 2}, {1, 2}, {3, 4}, {5, 6}};
  const std::vector<TokenSeq> docs = {{1, 2}, {3, 4}, {5, 6}, {7}, {8}};
  const IdfTable idf = IdfTable::Build(Ptrs(docs));
  SelectorConfig c;
  c.k = 2;
  c.alpha = 0.5;
  const PairSelection s = SelectForPair({0, 1, 2, 3}, {0.9, 0.9, 0.3, 0.2}, Ptrs(toks), idf, c);
  EXPECT_EQ(s.sentences, (std::vector<SentenceIndex>{0, 2}));
  c.use_ilp = false;
  const PairSelection plain = SelectForPair({0, 1, 2, 3}, {0.9, 0.9, 0.3, 0.2}, Ptrs(toks), idf, c);
  EXPECT_EQ(plain.sentences, (std::vector<SentenceIndex>{0, 1}));
}

TEST(SelectForPair, KOneIsBestSentence) {
  const std::vector<TokenSeq> toks = {{1}, {2}, {3}};
  const IdfTable idf = IdfTable::Build(Ptrs(toks));
  SelectorConfig c;
  c.k = 1;
  EXPECT_EQ(SelectForPair({4, 5, 6}, {0.2, 0.1, 0.7}, Ptrs(toks), idf, c).sentences,
            (std::vector<SentenceIndex>{6}));
}

TEST(SelectForPair, EmptyCandidates) {
  const PairSelection s = SelectForPair({}, {}, {}, IdfTable(), SelectorConfig());
  EXPECT_TRUE(s.sentences.empty());
}

}  // namespace
}  // namespace graphex::selector
