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

#include "graphex/model/gat.h"

#include <algorithm>
#include <cmath>

#include "graphex/common/error.h"

namespace graphex::model {

double Activate(Activation a, double x) {
  switch (a) {
    case Activation::kElu: return x > 0 ? x : std::expm1(x);
    case Activation::kRelu: return x > 0 ? x : 0.0;
    case Activation::kSigmoid: return 1.0 / (1.0 + std::exp(-x));
    case Activation::kIdentity: return x;
  }
  return x;
}

double ActivateGrad(Activation a, double x) {
  switch (a) {
    case Activation::kElu: return x > 0 ? 1.0 : std::exp(x);
    case Activation::kRelu: return x > 0 ? 1.0 : 0.0;
    case Activation::kSigmoid: {
      const double s = 1.0 / (1.0 + std::exp(-x));
      return s * (1.0 - s);
    }
    case Activation::kIdentity: return 1.0;
  }
  return 1.0;
}

namespace {

double Leaky(double x, double slope) { return x > 0 ? x : slope * x; }
double LeakyGrad(double x, double slope) { return x > 0 ? 1.0 : slope; }

}  // namespace

GatLayerTrace GatLayerForward(const Eigen::MatrixXd& input,
                              const Neighborhoods& neighbors,
                              const GatLayerParams& params, Activation act,
                              double leaky_slope) {
  const Eigen::Index n = input.rows();
  const Eigen::Index d = input.cols();
  if (static_cast<Eigen::Index>(neighbors.size()) != n) {
    throw ShapeError("neighborhood count does not match node count");
  }
  GatLayerTrace trace;
  trace.input = input;
  trace.output.resize(n, d * static_cast<Eigen::Index>(params.heads.size()));

  for (size_t h = 0; h < params.heads.size(); ++h) {
    const GatHeadParams& head = params.heads[h];
    const Eigen::Index p = head.w_query.rows();
    if (head.w_query.cols() != d || head.w_key.cols() != d || head.w_key.rows() != p ||
        head.attention.rows() != 2 * p || head.attention.cols() != 1) {
      throw ShapeError("attention head shapes do not match layer input");
    }
    HeadTrace ht;
    ht.query = input * head.w_query.transpose();
    ht.key = input * head.w_key.transpose();
    ht.query_score = ht.query * head.attention.topRows(p);
    ht.key_score = ht.key * head.attention.bottomRows(p);
    ht.logits.resize(n);
    ht.alpha.resize(n);
    ht.aggregate = Eigen::MatrixXd::Zero(n, d);

    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& nb = neighbors[i];
      if (nb.empty()) {
        throw Error("node " + std::to_string(i) +
                    " has an empty attention neighborhood (enable self-loops?)");
      }
      auto& e = ht.logits[i];
      auto& a = ht.alpha[i];
      e.resize(nb.size());
      a.resize(nb.size());
      double zmax = -INFINITY;
      for (size_t k = 0; k < nb.size(); ++k) {
        e[k] = ht.query_score(i) + ht.key_score(nb[k]);
        a[k] = Leaky(e[k], leaky_slope);
        zmax = std::max(zmax, a[k]);
      }
      double total = 0.0;
      for (double& v : a) {
        v = std::exp(v - zmax);
        total += v;
      }
      for (size_t k = 0; k < nb.size(); ++k) {
        a[k] /= total;
        ht.aggregate.row(i) += a[k] * input.row(nb[k]);
      }
    }
    auto out = trace.output.middleCols(static_cast<Eigen::Index>(h) * d, d);
    out = ht.aggregate.unaryExpr([act](double x) { return Activate(act, x); });
    trace.heads.push_back(std::move(ht));
  }
  return trace;
}

Eigen::MatrixXd GatLayerBackward(const GatLayerTrace& trace,
                                 const Neighborhoods& neighbors,
                                 const GatLayerParams& params, Activation act,
                                 double leaky_slope,
                                 const Eigen::MatrixXd& d_output,
                                 GatLayerParams& grads) {
  const Eigen::MatrixXd& input = trace.input;
  const Eigen::Index n = input.rows();
  const Eigen::Index d = input.cols();
  if (d_output.rows() != trace.output.rows() || d_output.cols() != trace.output.cols()) {
    throw ShapeError("upstream gradient does not match layer output");
  }
  Eigen::MatrixXd d_input = Eigen::MatrixXd::Zero(n, d);

  for (size_t h = 0; h < params.heads.size(); ++h) {
    const GatHeadParams& head = params.heads[h];
    const HeadTrace& ht = trace.heads[h];
    GatHeadParams& g = grads.heads[h];
    const Eigen::Index p = head.w_query.rows();

    const Eigen::MatrixXd d_agg =
        d_output.middleCols(static_cast<Eigen::Index>(h) * d, d)
            .cwiseProduct(ht.aggregate.unaryExpr(
                [act](double x) { return ActivateGrad(act, x); }));

    Eigen::VectorXd d_query_score = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd d_key_score = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& nb = neighbors[i];
      const auto& a = ht.alpha[i];
      std::vector<double> d_alpha(nb.size());
      double weighted = 0.0;
      for (size_t k = 0; k < nb.size(); ++k) {
        d_input.row(nb[k]) += a[k] * d_agg.row(i);
        d_alpha[k] = d_agg.row(i).dot(input.row(nb[k]));
        weighted += a[k] * d_alpha[k];
      }
      for (size_t k = 0; k < nb.size(); ++k) {
        const double d_z = a[k] * (d_alpha[k] - weighted);
        const double d_e = d_z * LeakyGrad(ht.logits[i][k], leaky_slope);
        d_query_score(i) += d_e;
        d_key_score(nb[k]) += d_e;
      }
    }
    const auto a_q = head.attention.topRows(p);
    const auto a_k = head.attention.bottomRows(p);
    g.attention.topRows(p) += ht.query.transpose() * d_query_score;
    g.attention.bottomRows(p) += ht.key.transpose() * d_key_score;
    const Eigen::MatrixXd d_query = d_query_score * a_q.transpose();  // N x p
    const Eigen::MatrixXd d_key = d_key_score * a_k.transpose();
    g.w_query += d_query.transpose() * input;
    g.w_key += d_key.transpose() * input;
    d_input += d_query * head.w_query + d_key * head.w_key;
  }
  return d_input;
}

}  // namespace graphex::model
