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

#include "graphex/model/dcn.h"

#include "graphex/common/error.h"

namespace graphex::model {

void ValidateDcn(const DcnParams& params, int input_dim) {
  for (const auto& c : params.cross) {
    if (c.weight.rows() != input_dim || c.weight.cols() != 1 ||
        c.bias.rows() != input_dim || c.bias.cols() != 1) {
      throw ShapeError("cross layer shape does not match interaction input width");
    }
  }
  int in = input_dim;
  for (const auto& l : params.deep) {
    if (l.weight.cols() != in || l.bias.rows() != l.weight.rows() || l.bias.cols() != 1) {
      throw ShapeError("deep layer shape does not match its input");
    }
    in = static_cast<int>(l.weight.rows());
  }
}

DcnTrace DcnForward(const Eigen::MatrixXd& x0, const DcnParams& params) {
  ValidateDcn(params, static_cast<int>(x0.cols()));
  DcnTrace t;
  t.x0 = x0;
  t.cross.push_back(x0);
  for (const auto& layer : params.cross) {
    const Eigen::MatrixXd& x = t.cross.back();
    Eigen::VectorXd dot = x * layer.weight;
    Eigen::MatrixXd next = x0.array().colwise() * dot.array();
    next.rowwise() += layer.bias.col(0).transpose();
    next += x;
    t.cross_dot.push_back(std::move(dot));
    t.cross.push_back(std::move(next));
  }
  t.deep.push_back(x0);
  for (const auto& layer : params.deep) {
    Eigen::MatrixXd pre = t.deep.back() * layer.weight.transpose();
    pre.rowwise() += layer.bias.col(0).transpose();
    t.deep.push_back(pre.cwiseMax(0.0));
    t.deep_pre.push_back(std::move(pre));
  }
  const Eigen::MatrixXd& xc = t.cross.back();
  const Eigen::MatrixXd& yd = t.deep.back();
  t.output.resize(x0.rows(), xc.cols() + yd.cols());
  t.output << xc, yd;
  return t;
}

Eigen::VectorXd DcnForward(const Eigen::VectorXd& x0, const DcnParams& params) {
  const Eigen::MatrixXd row = x0.transpose();
  return DcnForward(row, params).output.row(0).transpose();
}

Eigen::MatrixXd DcnBackward(const DcnTrace& t, const DcnParams& params,
                            const Eigen::MatrixXd& d_output, DcnParams& grads) {
  const Eigen::Index dc = t.cross.back().cols();
  const Eigen::Index dd = t.deep.back().cols();
  if (d_output.rows() != t.output.rows() || d_output.cols() != dc + dd) {
    throw ShapeError("upstream gradient does not match interaction output");
  }
  Eigen::MatrixXd d_x0 = Eigen::MatrixXd::Zero(t.x0.rows(), t.x0.cols());

  Eigen::MatrixXd d_x = d_output.leftCols(dc);
  for (size_t l = params.cross.size(); l-- > 0;) {
    const auto& layer = params.cross[l];
    const Eigen::MatrixXd& x = t.cross[l];
    // v_r = <x0_r, dx_{l+1,r}>
    const Eigen::VectorXd v = t.x0.cwiseProduct(d_x).rowwise().sum();
    grads.cross[l].weight += x.transpose() * v;
    grads.cross[l].bias += d_x.colwise().sum().transpose();
    d_x0 += (d_x.array().colwise() * t.cross_dot[l].array()).matrix();
    d_x += v * layer.weight.transpose();
  }
  d_x0 += d_x;

  Eigen::MatrixXd d_y = d_output.rightCols(dd);
  for (size_t l = params.deep.size(); l-- > 0;) {
    const auto& layer = params.deep[l];
    const Eigen::MatrixXd d_pre =
        d_y.cwiseProduct((t.deep_pre[l].array() > 0.0).cast<double>().matrix());
    grads.deep[l].weight += d_pre.transpose() * t.deep[l];
    grads.deep[l].bias += d_pre.colwise().sum().transpose();
    d_y = d_pre * layer.weight;
  }
  d_x0 += d_y;
  return d_x0;
}

}  // namespace graphex::model
