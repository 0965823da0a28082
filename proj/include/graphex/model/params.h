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

#ifndef GRAPHEX_MODEL_PARAMS_H_
#define GRAPHEX_MODEL_PARAMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphex/common/types.h"

namespace graphex::model {

enum class Activation { kElu, kRelu, kSigmoid, kIdentity };

Activation ParseActivation(const std::string& name);
std::string ActivationName(Activation a);

struct ModelConfig {
  int node_dim = 256;        // width of every graph input state (d_u = d_c)
  int attention_dim = 256;   // rows of the query/key projections
  std::vector<int> heads = {4, 1};
  int cross_layers = 2;
  int deep_layers = 2;
  int deep_dim = 128;
  double leaky_slope = 0.2;
  Activation gat_activation = Activation::kElu;
  bool use_gat = true;
  bool use_dcn = true;
  int attribute_input_dim = 256;
  int sentence_input_dim = 256;
  double embedding_init_scale = 0.1;

  // Width of the final graph states (node_dim * product of head counts).
  int GraphOutputDim() const;
  // Width of the per-sentence interaction input x0.
  int InteractionInputDim() const;
  // Width of the representation fed to the score head.
  int ScoreInputDim() const;
  void Validate() const;  // throws ConfigError
};

// Per-head attention parameters. `attention` is the weight vector over the
// concatenated [query || key] projections (length 2 * attention_dim).
struct GatHeadParams {
  Eigen::MatrixXd w_query;
  Eigen::MatrixXd w_key;
  Eigen::MatrixXd attention;
};

struct GatLayerParams {
  std::vector<GatHeadParams> heads;
};

struct CrossLayerParams {
  Eigen::MatrixXd weight;  // D x 1
  Eigen::MatrixXd bias;    // D x 1
};

struct DeepLayerParams {
  Eigen::MatrixXd weight;  // out x in
  Eigen::MatrixXd bias;    // out x 1
};

struct DcnParams {
  std::vector<CrossLayerParams> cross;
  std::vector<DeepLayerParams> deep;
};

// Every trainable tensor. Vectors are stored as single-column matrices so
// that all tensors can be visited uniformly by name.
struct ModelParams {
  Eigen::MatrixXd user_table;           // |U| x node_dim
  Eigen::MatrixXd item_table;           // |C| x node_dim
  Eigen::MatrixXd attribute_projection; // node_dim x d_f, empty if unused
  Eigen::MatrixXd sentence_projection;  // node_dim x d_s, empty if unused
  std::vector<GatLayerParams> gat;
  DcnParams dcn;
  Eigen::MatrixXd score_head;      // ScoreInputDim x 1
  Eigen::MatrixXd attribute_head;  // GraphOutputDim x 1

  // Visits (name, tensor) in a fixed order. Empty tensors are skipped.
  template <typename Fn>
  void ForEach(Fn&& fn);
  template <typename Fn>
  void ForEach(Fn&& fn) const;

  size_t NumTensors() const;
  size_t NumScalars() const;
  bool SameShapes(const ModelParams& other) const;
  bool operator==(const ModelParams& other) const;
};

// Zero-valued tensors with the shapes of `like`.
ModelParams ZerosLike(const ModelParams& like);

// Initializes every tensor for `config`. User/item tables are uniform in
// [-scale, scale]; weight matrices use Glorot-uniform bounds; biases start at
// zero. Deterministic in `seed`.
ModelParams InitParams(const ModelConfig& config, int num_users, int num_items,
                       uint64_t seed);

// Uniform [-scale, scale] matrix from a portable generator.
Eigen::MatrixXd UniformMatrix(int rows, int cols, double scale, uint64_t seed);

// Gradient of one graph. The network tensors are dense; the embedding tables
// are left empty and only the touched user and item rows are carried.
struct Gradients {
  ModelParams net;
  UserIndex user = -1;
  Eigen::VectorXd user_row;
  ItemIndex item = -1;
  Eigen::VectorXd item_row;

  // Adds `scale * this` into a full-shape gradient accumulator.
  void AccumulateInto(ModelParams& full, double scale = 1.0) const;
};

template <typename Fn>
void ModelParams::ForEach(Fn&& fn) {
  auto visit = [&](const std::string& name, Eigen::MatrixXd& t) {
    if (t.size() > 0) fn(name, t);
  };
  visit("user_embedding", user_table);
  visit("item_embedding", item_table);
  visit("attribute_projection", attribute_projection);
  visit("sentence_projection", sentence_projection);
  for (size_t l = 0; l < gat.size(); ++l) {
    for (size_t h = 0; h < gat[l].heads.size(); ++h) {
      const std::string prefix =
          "gat." + std::to_string(l) + ".head." + std::to_string(h) + ".";
      visit(prefix + "w_query", gat[l].heads[h].w_query);
      visit(prefix + "w_key", gat[l].heads[h].w_key);
      visit(prefix + "attention", gat[l].heads[h].attention);
    }
  }
  for (size_t l = 0; l < dcn.cross.size(); ++l) {
    visit("cross." + std::to_string(l) + ".weight", dcn.cross[l].weight);
    visit("cross." + std::to_string(l) + ".bias", dcn.cross[l].bias);
  }
  for (size_t l = 0; l < dcn.deep.size(); ++l) {
    visit("deep." + std::to_string(l) + ".weight", dcn.deep[l].weight);
    visit("deep." + std::to_string(l) + ".bias", dcn.deep[l].bias);
  }
  visit("score_head", score_head);
  visit("attribute_head", attribute_head);
}

template <typename Fn>
void ModelParams::ForEach(Fn&& fn) const {
  const_cast<ModelParams*>(this)->ForEach(
      [&](const std::string& name, Eigen::MatrixXd& t) {
        fn(name, static_cast<const Eigen::MatrixXd&>(t));
      });
}

}  // namespace graphex::model

#endif  // GRAPHEX_MODEL_PARAMS_H_
