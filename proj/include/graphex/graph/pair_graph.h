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

#ifndef GRAPHEX_GRAPH_PAIR_GRAPH_H_
#define GRAPHEX_GRAPH_PAIR_GRAPH_H_

#include <ostream>
#include <string_view>
#include <vector>

#include "graphex/common/error.h"
#include "graphex/common/types.h"
#include "graphex/corpus/corpus.h"

namespace graphex::graph {

enum class NodeKind { kUser, kItem, kAttribute, kSentence };
enum class EdgeKind { kUserAttribute, kItemAttribute, kAttributeSentence };

std::string_view NodeKindName(NodeKind kind);

struct GraphOptions {
  bool self_loops = true;
  bool restrict_to_item_attributes = true;
};

// Raised when a pair has no candidate sentences; callers skip the pair.
class EmptyPoolError : public Error {
 public:
  using Error::Error;
};

// Heterogeneous graph for one (user, item) pair.
//
// Node numbering is fixed: 0 is the user, 1 the item, then one node per
// attribute (ascending attribute id), then one node per sentence (ascending
// sentence id). Edges are undirected with unit weight and only ever join an
// attribute node to a user, item or sentence node.
class PairGraph {
 public:
  static constexpr int kUserNode = 0;
  static constexpr int kItemNode = 1;

  // `sentence_attributes[k]` lists the attributes of `sentences[k]`.
  // `sentences` must be sorted; attribute lists need not be.
  static PairGraph Assemble(
      UserIndex user, ItemIndex item, std::vector<SentenceIndex> sentences,
      const std::vector<std::vector<AttributeIndex>>& sentence_attributes,
      const std::vector<AttributeIndex>& user_attributes,
      const std::vector<AttributeIndex>& item_attributes,
      const GraphOptions& options);

  UserIndex user() const { return user_; }
  ItemIndex item() const { return item_; }
  const std::vector<SentenceIndex>& sentence_nodes() const { return sentences_; }
  const std::vector<AttributeIndex>& attribute_nodes() const { return attributes_; }
  bool self_loops() const { return self_loops_; }

  int num_nodes() const { return 2 + num_attributes() + num_sentences(); }
  int num_attributes() const { return static_cast<int>(attributes_.size()); }
  int num_sentences() const { return static_cast<int>(sentences_.size()); }
  int AttributeNode(int k) const { return 2 + k; }
  int SentenceNode(int k) const { return 2 + num_attributes() + k; }
  NodeKind Kind(int node) const;

  // Undirected adjacency without self-loops, sorted ascending.
  const std::vector<int>& Adjacency(int node) const;
  // Attention neighborhood: adjacency plus the node itself when self-loops
  // are enabled. Sorted ascending. Throws Error for unknown nodes.
  std::vector<int> Neighbors(int node) const;
  EdgeKind KindOfEdge(int a, int b) const;

  // Supervision, present for graphs built with a target review.
  ReviewIndex target_review() const { return target_review_; }
  const std::vector<SentenceIndex>& positive_set() const { return positive_set_; }
  const std::vector<double>& attribute_labels() const { return attribute_labels_; }
  void SetSupervision(ReviewIndex target, std::vector<SentenceIndex> positives,
                      const std::vector<AttributeIndex>& target_attributes);

  // Debug dump: one line per node "<node> <kind> <id> : <neighbors...>".
  void Dump(std::ostream& out) const;

  bool operator==(const PairGraph& o) const = default;

 private:
  UserIndex user_ = 0;
  ItemIndex item_ = 0;
  bool self_loops_ = true;
  std::vector<SentenceIndex> sentences_;
  std::vector<AttributeIndex> attributes_;
  std::vector<std::vector<int>> adjacency_;
  ReviewIndex target_review_ = -1;
  std::vector<SentenceIndex> positive_set_;
  std::vector<double> attribute_labels_;
};

// Builds the graph for (user, item) from the corpus. In train mode `target`
// is the pair's training review and supplies the positive set and attribute
// labels; in eval mode `target` (optional) only supplies attribute labels.
// Throws EmptyPoolError when no candidate sentence survives.
PairGraph BuildPairGraph(const corpus::Corpus& corpus, UserIndex user,
                         ItemIndex item, PoolMode mode, ReviewIndex target,
                         const GraphOptions& options);

}  // namespace graphex::graph

#endif  // GRAPHEX_GRAPH_PAIR_GRAPH_H_
