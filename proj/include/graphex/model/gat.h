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

#ifndef GRAPHEX_MODEL_GAT_H_
#define GRAPHEX_MODEL_GAT_H_

#include <vector>

#include <Eigen/Dense>

#include "graphex/model/params.h"

namespace graphex::model {

// Neighborhood lists per node (the attention neighborhoods, self-loops
// included when enabled).
using Neighborhoods = std::vector<std::vector<int>>;

double Activate(Activation a, double x);
// Derivative expressed in terms of the pre-activation x.
double ActivateGrad(Activation a, double x);

struct HeadTrace {
  Eigen::MatrixXd query;  // N x p, W_q h_i
  Eigen::MatrixXd key;    // N x p, W_k h_j
  Eigen::VectorXd query_score;  // N, <a_q, W_q h_i>
  Eigen::VectorXd key_score;    // N, <a_k, W_k h_j>
  // Aligned with Neighborhoods: pre-LeakyReLU logits and attention weights.
  std::vector<std::vector<double>> logits;
  std::vector<std::vector<double>> alpha;
  Eigen::MatrixXd aggregate;  // N x d_in, sum_j alpha_ij h_j
};

struct GatLayerTrace {
  Eigen::MatrixXd input;   // N x d_in
  std::vector<HeadTrace> heads;
  Eigen::MatrixXd output;  // N x (heads * d_in)
};

// One multi-head attention layer:
//   e_ij = <a_q, W_q h_i> + <a_k, W_k h_j>
//   alpha_ij = softmax over j in N(i) of LeakyReLU(e_ij)
//   h'_i = act(sum_j alpha_ij h_j), heads concatenated.
// Throws ShapeError on mismatched shapes and Error on an empty neighborhood.
GatLayerTrace GatLayerForward(const Eigen::MatrixXd& input,
                              const Neighborhoods& neighbors,
                              const GatLayerParams& params, Activation act,
                              double leaky_slope);

// Accumulates parameter gradients into `grads` and returns dL/d(input).
Eigen::MatrixXd GatLayerBackward(const GatLayerTrace& trace,
                                 const Neighborhoods& neighbors,
                                 const GatLayerParams& params, Activation act,
                                 double leaky_slope,
                                 const Eigen::MatrixXd& d_output,
                                 GatLayerParams& grads);

}  // namespace graphex::model

#endif  // GRAPHEX_MODEL_GAT_H_
