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

#ifndef GRAPHEX_MODEL_MODEL_H_
#define GRAPHEX_MODEL_MODEL_H_

#include <vector>

#include <Eigen/Dense>

#include "graphex/graph/pair_graph.h"
#include "graphex/model/dcn.h"
#include "graphex/model/gat.h"
#include "graphex/model/params.h"

namespace graphex::model {

// Raw (pre-projection) input vectors for the attribute and sentence nodes of
// one graph, in graph node order.
struct GraphInputs {
  Eigen::MatrixXd attributes;  // M x d_f
  Eigen::MatrixXd sentences;   // S x d_s
};

struct ForwardTrace {
  UserIndex user = -1;
  ItemIndex item = -1;
  int num_attributes = 0;
  int num_sentences = 0;
  Neighborhoods neighbors;
  std::vector<std::vector<int>> sentence_attributes;  // attribute slots per sentence
  GraphInputs inputs;
  Eigen::MatrixXd h0;            // N x node_dim
  std::vector<GatLayerTrace> layers;
  Eigen::MatrixXd final_states;  // N x GraphOutputDim
  Eigen::MatrixXd x0;            // S x InteractionInputDim
  DcnTrace dcn;
  Eigen::MatrixXd score_input;   // S x ScoreInputDim
  Eigen::VectorXd scores;        // g(s) per sentence node
  Eigen::VectorXd attribute_probs;  // p(f) per attribute node
  size_t param_scalars = 0;
};

// Scoring network over a PairGraph: stacked graph attention layers, a deep &
// cross interaction per sentence, a linear sentence score head and a
// logistic attribute head. Backward is exact for this fixed architecture.
class Model {
 public:
  explicit Model(ModelConfig config);

  const ModelConfig& config() const { return config_; }

  ForwardTrace Forward(const graph::PairGraph& graph, const GraphInputs& inputs,
                       const ModelParams& params) const;

  // `d_scores` and `d_probs` are dL/dg(s) and dL/dp(f). Throws ShapeError if
  // the trace was not produced with parameters of this shape.
  Gradients Backward(const ForwardTrace& trace, const ModelParams& params,
                     const Eigen::VectorXd& d_scores,
                     const Eigen::VectorXd& d_probs) const;

  // Throws ShapeError if `params` does not fit this configuration.
  void CheckParams(const ModelParams& params) const;

 private:
  ModelConfig config_;
};

}  // namespace graphex::model

#endif  // GRAPHEX_MODEL_MODEL_H_
