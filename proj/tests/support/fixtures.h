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

#ifndef GRAPHEX_TESTS_SUPPORT_FIXTURES_H_
#define GRAPHEX_TESTS_SUPPORT_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphex/corpus/corpus.h"
#include "graphex/graph/pair_graph.h"
#include "graphex/model/model.h"
#include "graphex/model/params.h"

namespace graphex::fixtures {

struct ReviewInput {
  std::string user;
  std::string item;
  std::string text;
  double rating = 20.0;
};

// Runs segmentation, tagging, the activity filter and corpus assembly over
// in-memory reviews.
corpus::Corpus MakeCorpus(const std::vector<ReviewInput>& reviews,
                          const std::vector<std::string>& lexicon,
                          const corpus::CorpusOptions& options);

// Random pair graph with user 0 and item 0 over attributes [0, num_attributes)
// and sentences [0, num_sentences). Every sentence has 1-2 attributes, the
// user and the item each link to a non-empty attribute subset, and every
// attribute carries a random 0/1 label.
graph::PairGraph RandomGraph(std::mt19937_64& rng, int num_attributes, int num_sentences,
                             bool self_loops = true);

// Tiny configuration for gradient checks.
model::ModelConfig TinyConfig(bool use_gat = true, bool use_dcn = true);

model::GraphInputs RandomInputs(std::mt19937_64& rng, const graph::PairGraph& graph,
                                const model::ModelConfig& config);

// Parameters drawn uniformly from [-scale, scale].
model::ModelParams RandomParams(std::mt19937_64& rng, const model::ModelConfig& config,
                                int num_users, int num_items, double scale);

std::vector<double> RandomTargets(std::mt19937_64& rng, int n);

struct GradientCheck {
  std::string worst_tensor;
  double max_relative_error = 0.0;
  size_t scalars_checked = 0;
};

// Central differences of `loss` over every scalar of every tensor, compared
// with `analytic`. Relative error is |a - n| / max(|a|, |n|); pairs where
// both magnitudes are below 1e-8 compare absolutely instead.
template <typename LossFn>
GradientCheck CheckGradients(model::ModelParams params, const model::ModelParams& analytic,
                             LossFn&& loss, double eps = 1e-5) {
  std::vector<std::pair<std::string, const Eigen::MatrixXd*>> grads;
  analytic.ForEach([&](const std::string& name, const Eigen::MatrixXd& t) {
    grads.emplace_back(name, &t);
  });
  GradientCheck out;
  size_t index = 0;
  std::vector<std::pair<std::string, Eigen::MatrixXd*>> tensors;
  params.ForEach([&](const std::string& name, Eigen::MatrixXd& t) { tensors.emplace_back(name, &t); });
  for (auto& [name, t] : tensors) {
    const Eigen::MatrixXd& g = *grads.at(index++).second;
    for (Eigen::Index i = 0; i < t->size(); ++i) {
      const double saved = t->data()[i];
      t->data()[i] = saved + eps;
      const double up = loss(params);
      t->data()[i] = saved - eps;
      const double down = loss(params);
      t->data()[i] = saved;
      const double numeric = (up - down) / (2 * eps);
      const double a = g.data()[i];
      const double scale = std::max(std::abs(a), std::abs(numeric));
      const double err = scale < 1e-8 ? std::abs(a - numeric) : std::abs(a - numeric) / scale;
      if (err > out.max_relative_error) {
        out.max_relative_error = err;
        out.worst_tensor = name;
      }
      ++out.scalars_checked;
    }
  }
  return out;
}

}  // namespace graphex::fixtures

#endif  // GRAPHEX_TESTS_SUPPORT_FIXTURES_H_
