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

#include "fixtures.h"

#include <algorithm>

namespace graphex::fixtures {

corpus::Corpus MakeCorpus(const std::vector<ReviewInput>& reviews,
                          const std::vector<std::string>& lexicon,
                          const corpus::CorpusOptions& options) {
  corpus::ReviewSet set;
  int line = 0;
  for (const auto& r : reviews) {
    corpus::ReviewRecord rec;
    rec.user_id = r.user;
    rec.item_id = r.item;
    rec.rating = r.rating;
    rec.text = r.text;
    rec.source_line = ++line;
    set.push_back(std::move(rec));
  }
  const auto lex = corpus::AttributeLexicon::FromEntries(lexicon);
  set = corpus::FilterMinActivity(corpus::SegmentAndTag(std::move(set), lex), options.min_activity);
  return corpus::Corpus::Build(set, lex, options);
}

namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<AttributeIndex> NonEmptySubset(std::mt19937_64& rng, int n) {
  std::vector<AttributeIndex> out;
  while (out.empty()) {
    for (int a = 0; a < n; ++a) {
      if (rng() % 2) out.push_back(a);
    }
  }
  return out;
}

}  // namespace

graph::PairGraph RandomGraph(std::mt19937_64& rng, int num_attributes, int num_sentences,
                             bool self_loops) {
  std::vector<SentenceIndex> sentences(num_sentences);
  std::vector<std::vector<AttributeIndex>> attrs(num_sentences);
  for (int s = 0; s < num_sentences; ++s) {
    sentences[s] = s;
    attrs[s].push_back(static_cast<AttributeIndex>(rng() % num_attributes));
    if (rng() % 2) attrs[s].push_back(static_cast<AttributeIndex>(rng() % num_attributes));
  }
  // Every attribute must appear on some sentence to become a node.
  for (int a = 0; a < num_attributes; ++a) attrs[a % num_sentences].push_back(a);
  graph::GraphOptions opts;
  opts.self_loops = self_loops;
  auto g = graph::PairGraph::Assemble(0, 0, sentences, attrs, NonEmptySubset(rng, num_attributes),
                                      NonEmptySubset(rng, num_attributes), opts);
  std::vector<AttributeIndex> positives;
  for (int a = 0; a < num_attributes; ++a) {
    if (rng() % 2) positives.push_back(a);
  }
  g.SetSupervision(0, {}, positives);
  return g;
}

model::ModelConfig TinyConfig(bool use_gat, bool use_dcn) {
  model::ModelConfig c;
  c.node_dim = 3;
  c.attention_dim = 2;
  c.heads = {2, 1};
  c.cross_layers = 2;
  c.deep_layers = 2;
  c.deep_dim = 4;
  c.attribute_input_dim = 2;
  c.sentence_input_dim = 4;
  c.use_gat = use_gat;
  c.use_dcn = use_dcn;
  return c;
}

model::GraphInputs RandomInputs(std::mt19937_64& rng, const graph::PairGraph& graph,
                                const model::ModelConfig& config) {
  model::GraphInputs in;
  in.attributes.resize(graph.num_attributes(), config.attribute_input_dim);
  in.sentences.resize(graph.num_sentences(), config.sentence_input_dim);
  for (Eigen::Index i = 0; i < in.attributes.size(); ++i) in.attributes.data()[i] = Uniform(rng, -1, 1);
  for (Eigen::Index i = 0; i < in.sentences.size(); ++i) in.sentences.data()[i] = Uniform(rng, -1, 1);
  return in;
}

model::ModelParams RandomParams(std::mt19937_64& rng, const model::ModelConfig& config,
                                int num_users, int num_items, double scale) {
  model::ModelParams p = model::InitParams(config, num_users, num_items, rng());
  p.ForEach([&](const std::string&, Eigen::MatrixXd& t) {
    for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = Uniform(rng, -scale, scale);
  });
  return p;
}

std::vector<double> RandomTargets(std::mt19937_64& rng, int n) {
  std::vector<double> r(n);
  for (double& x : r) x = Uniform(rng, 0, 1);
  return r;
}

}  // namespace graphex::fixtures
