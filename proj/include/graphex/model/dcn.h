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

#ifndef GRAPHEX_MODEL_DCN_H_
#define GRAPHEX_MODEL_DCN_H_

#include <vector>

#include <Eigen/Dense>

#include "graphex/model/params.h"

namespace graphex::model {

// Row-batched deep & cross network. Each row of `x0` is one sentence's
// interaction input [user || item || sentence].
//   cross: x_{l+1} = x0 * <x_l, w_l> + b_l + x_l
//   deep:  y_{l+1} = relu(W_l y_l + b_l), y_0 = x0
//   output = [x_Lc || y_Ld]
struct DcnTrace {
  Eigen::MatrixXd x0;
  std::vector<Eigen::MatrixXd> cross;      // x_0 .. x_Lc
  std::vector<Eigen::VectorXd> cross_dot;  // <x_l, w_l> per row
  std::vector<Eigen::MatrixXd> deep;       // y_0 .. y_Ld
  std::vector<Eigen::MatrixXd> deep_pre;   // pre-activations
  Eigen::MatrixXd output;
};

// Shape checks against the parameters happen here; throws ShapeError.
void ValidateDcn(const DcnParams& params, int input_dim);

DcnTrace DcnForward(const Eigen::MatrixXd& x0, const DcnParams& params);

// Single-vector convenience wrapper.
Eigen::VectorXd DcnForward(const Eigen::VectorXd& x0, const DcnParams& params);

// Accumulates parameter gradients into `grads`; returns dL/dx0.
Eigen::MatrixXd DcnBackward(const DcnTrace& trace, const DcnParams& params,
                            const Eigen::MatrixXd& d_output, DcnParams& grads);

}  // namespace graphex::model

#endif  // GRAPHEX_MODEL_DCN_H_
