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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "graphex/graph/pair_graph.h"

namespace graphex::graph {
namespace {

PairGraph Minimal(bool self_loops) {
  GraphOptions o;
  o.self_loops = self_loops;
  return PairGraph::Assemble(0, 0, {7}, {{3}}, {3}, {3}, o);
}

TEST(PairGraph, MinimalGraph) {
  const PairGraph g = Minimal(false);
  ASSERT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.attribute_nodes(), (std::vector<AttributeIndex>{3}));
  EXPECT_EQ(g.sentence_nodes(), (std::vector<SentenceIndex>{7}));
  const int f = g.AttributeNode(0);
  const int s = g.SentenceNode(0);
  EXPECT_EQ(g.Adjacency(PairGraph::kUserNode), (std::vector<int>{f}));
  EXPECT_EQ(g.Adjacency(PairGraph::kItemNode), (std::vector<int>{f}));
  EXPECT_EQ(g.Adjacency(f), (std::vector<int>{0, 1, s}));
  EXPECT_EQ(g.Adjacency(s), (std::vector<int>{f}));
  EXPECT_EQ(g.KindOfEdge(0, f), EdgeKind::kUserAttribute);
  EXPECT_EQ(g.KindOfEdge(f, 1), EdgeKind::kItemAttribute);
  EXPECT_EQ(g.KindOfEdge(s, f), EdgeKind::kAttributeSentence);
}

TEST(PairGraph, NeighborsIncludeSelfWhenEnabled) {
  const PairGraph on = Minimal(true);
  EXPECT_EQ(on.Neighbors(0), (std::vector<int>{0, 2}));
  EXPECT_EQ(on.Neighbors(2), (std::vector<int>{0, 1, 2, 3}));
  const PairGraph off = Minimal(false);
  EXPECT_EQ(off.Neighbors(0), (std::vector<int>{2}));
  EXPECT_THROW(off.Neighbors(4), Error);
  EXPECT_THROW(off.Neighbors(-1), Error);
}

TEST(PairGraph, SentenceWithTwoAttributes) {
  GraphOptions o;
  o.self_loops = false;
  const PairGraph g = PairGraph::Assemble(0, 0, {1, 2}, {{5, 9}, {9}}, {5}, {9}, o);
  EXPECT_EQ(g.Neighbors(g.SentenceNode(0)), (std::vector<int>{g.AttributeNode(0), g.AttributeNode(1)}));
  // The user only links to its own attribute.
  EXPECT_EQ(g.Adjacency(0), (std::vector<int>{g.AttributeNode(0)}));
}

TEST(PairGraph, UserAttributeWithoutSentenceIsAbsent) {
  const PairGraph g = PairGraph::Assemble(0, 0, {1}, {{2}}, {2, 4}, {2}, {});
  EXPECT_EQ(g.attribute_nodes(), (std::vector<AttributeIndex>{2}));
}

TEST(PairGraph, StructuralInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const PairGraph g = fixtures::RandomGraph(rng, 1 + static_cast<int>(rng() % 4),
                                              1 + static_cast<int>(rng() % 6), false);
    for (int i = 0; i < g.num_nodes(); ++i) {
      for (int j : g.Adjacency(i)) {
        ASSERT_NE(i, j);
        const auto& back = g.Adjacency(j);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), i));
        // Every edge has exactly one attribute endpoint.
        const bool ia = g.Kind(i) == NodeKind::kAttribute;
        const bool ja = g.Kind(j) == NodeKind::kAttribute;
        EXPECT_NE(ia, ja);
      }
    }
    for (int k = 0; k < g.num_attributes(); ++k) {
      const auto& adj = g.Adjacency(g.AttributeNode(k));
      EXPECT_TRUE(std::any_of(adj.begin(), adj.end(),
                              [&](int j) { return g.Kind(j) == NodeKind::kSentence; }));
    }
    for (int k = 0; k < g.num_sentences(); ++k) {
      EXPECT_FALSE(g.Adjacency(g.SentenceNode(k)).empty());
    }
  }
}

// Two users sharing two items; the item attribute set decides which
// sentences survive the restriction.
corpus::Corpus TwoUserCorpus() {
  corpus::CorpusOptions o;
  o.min_activity = 1;
  o.ratios = {1.0, 0.0, 0.0};
  return fixtures::MakeCorpus({{"a", "x", "Nice room. Kind staff."},
                               {"a", "y", "The pool was warm."},
                               {"b", "x", "Big room!"},
                               {"b", "y", "Pool and view."}},
                              {"room", "staff", "pool", "view"}, o);
}

TEST(BuildPairGraph, RestrictionDropsForeignSentences) {
  const auto c = TwoUserCorpus();
  GraphOptions on;
  GraphOptions off;
  off.restrict_to_item_attributes = false;
  const ReviewIndex target = 0;  // a on x
  const auto& rev = c.review(target);
  const PairGraph restricted = BuildPairGraph(c, rev.user, rev.item, PoolMode::kTrain, target, on);
  const PairGraph full = BuildPairGraph(c, rev.user, rev.item, PoolMode::kTrain, target, off);
  EXPECT_LT(restricted.num_sentences(), full.num_sentences());
  const auto& item_attrs = c.ItemTrainAttributes(rev.item);
  for (SentenceIndex s : restricted.sentence_nodes()) {
    const auto& a = c.sentence(s).attributes;
    EXPECT_TRUE(std::any_of(a.begin(), a.end(), [&](AttributeIndex f) {
      return std::binary_search(item_attrs.begin(), item_attrs.end(), f);
    }));
  }
}

TEST(BuildPairGraph, NodeSetMatchesRecount) {
  const auto c = TwoUserCorpus();
  GraphOptions off;
  off.restrict_to_item_attributes = false;
  for (ReviewIndex r = 0; r < static_cast<ReviewIndex>(c.reviews().size()); ++r) {
    const auto& rev = c.review(r);
    const PairGraph g = BuildPairGraph(c, rev.user, rev.item, PoolMode::kTrain, r, off);
    std::vector<AttributeIndex> expected;
    for (SentenceIndex s : g.sentence_nodes()) {
      const auto& a = c.sentence(s).attributes;
      expected.insert(expected.end(), a.begin(), a.end());
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(g.attribute_nodes(), expected);
    const auto& ua = c.UserTrainAttributes(rev.user);
    for (int k = 0; k < g.num_attributes(); ++k) {
      const auto& adj = g.Adjacency(g.AttributeNode(k));
      const bool has_user = std::binary_search(adj.begin(), adj.end(), PairGraph::kUserNode);
      EXPECT_EQ(has_user, std::binary_search(ua.begin(), ua.end(), g.attribute_nodes()[k]));
    }
  }
}

TEST(BuildPairGraph, LabelsMarkTargetAttributes) {
  const auto c = TwoUserCorpus();
  const PairGraph g = BuildPairGraph(c, 0, 0, PoolMode::kTrain, 0, {});
  EXPECT_EQ(g.positive_set(), c.review(0).sentences);
  ASSERT_EQ(g.attribute_labels().size(), static_cast<size_t>(g.num_attributes()));
  for (int k = 0; k < g.num_attributes(); ++k) {
    const std::string& name = c.lexicon().Surface(g.attribute_nodes()[k]);
    EXPECT_EQ(g.attribute_labels()[k], name == "room" || name == "staff" ? 1.0 : 0.0) << name;
  }
}

TEST(BuildPairGraph, RebuildIsIdentical) {
  const auto c = TwoUserCorpus();
  const PairGraph a = BuildPairGraph(c, 1, 1, PoolMode::kTrain, 3, {});
  const PairGraph b = BuildPairGraph(c, 1, 1, PoolMode::kTrain, 3, {});
  EXPECT_TRUE(a == b);
  std::ostringstream da, db;
  a.Dump(da);
  b.Dump(db);
  EXPECT_EQ(da.str(), db.str());
}

TEST(BuildPairGraph, EmptyPoolThrows) {
  corpus::CorpusOptions o;
  o.min_activity = 1;
  o.ratios = {0.0, 0.5, 0.5};
  const auto c = fixtures::MakeCorpus({{"a", "x", "Nice room."}, {"b", "y", "Nice view."}},
                                      {"room", "view"}, o);
  EXPECT_THROW(BuildPairGraph(c, 0, 0, PoolMode::kEval, -1, {}), EmptyPoolError);
}

}  // namespace
}  // namespace graphex::graph
