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

#include "graphex/graph/pair_graph.h"

#include <algorithm>
#include <string>

namespace graphex::graph {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kUser: return "user";
    case NodeKind::kItem: return "item";
    case NodeKind::kAttribute: return "attribute";
    case NodeKind::kSentence: return "sentence";
  }
  return "?";
}

PairGraph PairGraph::Assemble(
    UserIndex user, ItemIndex item, std::vector<SentenceIndex> sentences,
    const std::vector<std::vector<AttributeIndex>>& sentence_attributes,
    const std::vector<AttributeIndex>& user_attributes,
    const std::vector<AttributeIndex>& item_attributes,
    const GraphOptions& options) {
  if (sentences.size() != sentence_attributes.size()) {
    throw Error("sentence/attribute list size mismatch");
  }
  if (!std::is_sorted(sentences.begin(), sentences.end())) {
    throw Error("sentence nodes must be sorted by id");
  }
  PairGraph g;
  g.user_ = user;
  g.item_ = item;
  g.self_loops_ = options.self_loops;
  g.sentences_ = std::move(sentences);
  for (const auto& attrs : sentence_attributes) {
    if (attrs.empty()) throw Error("sentence node without attributes");
    g.attributes_.insert(g.attributes_.end(), attrs.begin(), attrs.end());
  }
  std::sort(g.attributes_.begin(), g.attributes_.end());
  g.attributes_.erase(std::unique(g.attributes_.begin(), g.attributes_.end()),
                      g.attributes_.end());

  g.adjacency_.assign(g.num_nodes(), {});
  auto connect = [&](int a, int b) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  };
  auto attr_node = [&](AttributeIndex a) {
    auto it = std::lower_bound(g.attributes_.begin(), g.attributes_.end(), a);
    return g.AttributeNode(static_cast<int>(it - g.attributes_.begin()));
  };
  for (int k = 0; k < g.num_attributes(); ++k) {
    const AttributeIndex a = g.attributes_[k];
    if (std::binary_search(user_attributes.begin(), user_attributes.end(), a)) {
      connect(kUserNode, g.AttributeNode(k));
    }
    if (std::binary_search(item_attributes.begin(), item_attributes.end(), a)) {
      connect(kItemNode, g.AttributeNode(k));
    }
  }
  for (int k = 0; k < g.num_sentences(); ++k) {
    std::vector<AttributeIndex> attrs = sentence_attributes[k];
    std::sort(attrs.begin(), attrs.end());
    attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
    for (AttributeIndex a : attrs) connect(attr_node(a), g.SentenceNode(k));
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

NodeKind PairGraph::Kind(int node) const {
  if (node < 0 || node >= num_nodes()) {
    throw Error("node " + std::to_string(node) + " not in graph");
  }
  if (node == kUserNode) return NodeKind::kUser;
  if (node == kItemNode) return NodeKind::kItem;
  if (node < 2 + num_attributes()) return NodeKind::kAttribute;
  return NodeKind::kSentence;
}

const std::vector<int>& PairGraph::Adjacency(int node) const {
  Kind(node);
  return adjacency_[node];
}

std::vector<int> PairGraph::Neighbors(int node) const {
  std::vector<int> out = Adjacency(node);
  if (self_loops_) out.insert(std::lower_bound(out.begin(), out.end(), node), node);
  return out;
}

EdgeKind PairGraph::KindOfEdge(int a, int b) const {
  NodeKind ka = Kind(a), kb = Kind(b);
  if (ka == NodeKind::kAttribute) std::swap(ka, kb);
  if (kb != NodeKind::kAttribute || ka == NodeKind::kAttribute) {
    throw Error("no edge kind joins these nodes");
  }
  switch (ka) {
    case NodeKind::kUser: return EdgeKind::kUserAttribute;
    case NodeKind::kItem: return EdgeKind::kItemAttribute;
    default: return EdgeKind::kAttributeSentence;
  }
}

void PairGraph::SetSupervision(ReviewIndex target,
                               std::vector<SentenceIndex> positives,
                               const std::vector<AttributeIndex>& target_attributes) {
  target_review_ = target;
  positive_set_ = std::move(positives);
  attribute_labels_.assign(attributes_.size(), 0.0);
  for (size_t k = 0; k < attributes_.size(); ++k) {
    if (std::binary_search(target_attributes.begin(), target_attributes.end(),
                           attributes_[k])) {
      attribute_labels_[k] = 1.0;
    }
  }
}

void PairGraph::Dump(std::ostream& out) const {
  for (int n = 0; n < num_nodes(); ++n) {
    const NodeKind kind = Kind(n);
    int id = 0;
    switch (kind) {
      case NodeKind::kUser: id = user_; break;
      case NodeKind::kItem: id = item_; break;
      case NodeKind::kAttribute: id = attributes_[n - 2]; break;
      case NodeKind::kSentence: id = sentences_[n - 2 - num_attributes()]; break;
    }
    out << n << ' ' << NodeKindName(kind) << ' ' << id << " :";
    for (int m : adjacency_[n]) out << ' ' << m;
    out << '\n';
  }
}

PairGraph BuildPairGraph(const corpus::Corpus& corpus, UserIndex user,
                         ItemIndex item, PoolMode mode, ReviewIndex target,
                         const GraphOptions& options) {
  std::vector<SentenceIndex> pool = corpus.CandidatePool(user, item, mode, target);
  const auto& item_attrs = corpus.ItemTrainAttributes(item);
  std::vector<SentenceIndex> kept;
  std::vector<std::vector<AttributeIndex>> kept_attrs;
  for (SentenceIndex s : pool) {
    const auto& attrs = corpus.sentence(s).attributes;
    if (options.restrict_to_item_attributes) {
      const bool shares = std::any_of(attrs.begin(), attrs.end(), [&](AttributeIndex a) {
        return std::binary_search(item_attrs.begin(), item_attrs.end(), a);
      });
      if (!shares) continue;
    }
    kept.push_back(s);
    kept_attrs.push_back(attrs);
  }
  if (kept.empty()) {
    throw EmptyPoolError("empty candidate pool for user " + corpus.users()[user] +
                         ", item " + corpus.items()[item]);
  }
  PairGraph g = PairGraph::Assemble(user, item, std::move(kept), kept_attrs,
                                    corpus.UserTrainAttributes(user), item_attrs,
                                    options);
  if (target >= 0) {
    const auto& review = corpus.review(target);
    std::vector<AttributeIndex> target_attrs;
    for (SentenceIndex s : review.sentences) {
      const auto& a = corpus.sentence(s).attributes;
      target_attrs.insert(target_attrs.end(), a.begin(), a.end());
    }
    std::sort(target_attrs.begin(), target_attrs.end());
    std::vector<SentenceIndex> positives;
    if (mode == PoolMode::kTrain) positives = review.sentences;
    g.SetSupervision(target, std::move(positives), target_attrs);
  }
  return g;
}

}  // namespace graphex::graph
