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

#ifndef GRAPHEX_TRAINING_TRAINER_H_
#define GRAPHEX_TRAINING_TRAINER_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphex/corpus/corpus.h"
#include "graphex/features/node_features.h"
#include "graphex/graph/pair_graph.h"
#include "graphex/model/model.h"
#include "graphex/model/params.h"
#include "graphex/training/adam.h"
#include "graphex/training/losses.h"

namespace graphex::training {

struct TrainConfig {
  double lambda = 0.5;
  int batch_size = 16;
  AdamConfig adam;
  int epochs = 50;
  int pair_budget = 200;
  bool all_pairs = false;
  bool balanced_bce = true;
  int patience = 10;
  int validation_top_k = 5;
  uint64_t seed = 7;
  int workers = 1;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

struct GraphLoss {
  double total = 0.0;
  double ranking = 0.0;
  double attribute = 0.0;
};

// Forward pass and loss for one graph; fills `grads` with dL/dtheta when
// non-null.
GraphLoss EvaluateGraphLoss(const model::Model& model, const graph::PairGraph& graph,
                            const model::GraphInputs& inputs, const model::ModelParams& params,
                            const std::vector<double>& relevance,
                            const std::vector<IndexPair>& pairs, double lambda, bool balanced,
                            model::Gradients* grads);

// Indices of the k highest scores, descending, ties by index.
std::vector<int> TopK(const Eigen::VectorXd& scores, int k);

struct Example {
  ReviewIndex target = -1;
  graph::PairGraph graph;
  std::vector<double> relevance;  // training examples only
};

struct ValidationScores {
  size_t pairs = 0;
  double bleu1 = 0.0, bleu2 = 0.0, bleu4 = 0.0;
  double selection = 0.0;  // mean smoothed sentence BLEU-4, picks the best epoch
};

struct EpochRecord {
  int epoch = 0;
  double loss = 0.0, loss_s = 0.0, loss_f = 0.0;
  ValidationScores validation;
  int skipped_batches = 0;
};

struct RunOptions {
  // Checkpoints, metrics.log and best.json go here; nothing is written when
  // empty.
  std::filesystem::path out_dir;
  std::string config_hash;
  // Continue from this epoch checkpoint.
  std::filesystem::path resume;
};

struct TrainResult {
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  double best_score = 0.0;
  model::ModelParams best_params;
  model::ModelParams final_params;
  bool stopped_early = false;
};

class Trainer {
 public:
  // Builds the training and validation graphs and the relevance targets.
  Trainer(const corpus::Corpus& corpus, const features::NodeFeatures& features,
          const model::ModelConfig& model_config, const graph::GraphOptions& graph_options,
          const TrainConfig& config);

  const model::Model& model() const { return model_; }
  const std::vector<Example>& train_examples() const { return train_; }
  const std::vector<Example>& valid_examples() const { return valid_; }
  size_t skipped_graphs() const { return skipped_graphs_; }

  model::ModelParams InitialParams() const;
  Eigen::VectorXd Score(const graph::PairGraph& graph, const model::ModelParams& params) const;
  ValidationScores Validate(const model::ModelParams& params) const;

  TrainResult Run(const RunOptions& options) const;

 private:
  struct BatchOutput;
  EpochRecord RunEpoch(int epoch, model::ModelParams& params, AdamState& adam) const;

  const corpus::Corpus& corpus_;
  const features::NodeFeatures& features_;
  model::Model model_;
  graph::GraphOptions graph_options_;
  TrainConfig config_;
  std::vector<Example> train_;
  std::vector<Example> valid_;
  std::vector<TokenSeq> valid_references_;
  size_t skipped_graphs_ = 0;
};

// Loads the parameters stored in an epoch checkpoint written by Trainer::Run.
model::ModelParams LoadTrainedParams(const std::filesystem::path& checkpoint,
                                     const model::ModelConfig& config, int num_users,
                                     int num_items, const std::string& expected_hash);

}  // namespace graphex::training

#endif  // GRAPHEX_TRAINING_TRAINER_H_
