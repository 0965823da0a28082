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

#include "graphex/model/model.h"

#include <cmath>

#include "graphex/common/error.h"

namespace graphex::model {

namespace {

double Sigmoid(double x) {
  return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

}  // namespace

Model::Model(ModelConfig config) : config_(std::move(config)) { config_.Validate(); }

void Model::CheckParams(const ModelParams& p) const {
  const ModelConfig& c = config_;
  auto fail = [](const std::string& what) { throw ShapeError("parameter mismatch: " + what); };
  if (p.user_table.cols() != c.node_dim || p.item_table.cols() != c.node_dim) {
    fail("embedding width != node_dim");
  }
  const bool want_attr_proj = c.attribute_input_dim != c.node_dim;
  const bool want_sent_proj = c.sentence_input_dim != c.node_dim;
  if (want_attr_proj != (p.attribute_projection.size() > 0) ||
      (want_attr_proj && (p.attribute_projection.rows() != c.node_dim ||
                          p.attribute_projection.cols() != c.attribute_input_dim))) {
    fail("attribute projection");
  }
  if (want_sent_proj != (p.sentence_projection.size() > 0) ||
      (want_sent_proj && (p.sentence_projection.rows() != c.node_dim ||
                          p.sentence_projection.cols() != c.sentence_input_dim))) {
    fail("sentence projection");
  }
  if (c.use_gat) {
    if (p.gat.size() != c.heads.size()) fail("graph layer count");
    int in = c.node_dim;
    for (size_t l = 0; l < p.gat.size(); ++l) {
      if (static_cast<int>(p.gat[l].heads.size()) != c.heads[l]) fail("head count");
      for (const auto& h : p.gat[l].heads) {
        if (h.w_query.rows() != c.attention_dim || h.w_query.cols() != in ||
            h.w_key.rows() != c.attention_dim || h.w_key.cols() != in ||
            h.attention.rows() != 2 * c.attention_dim || h.attention.cols() != 1) {
          fail("attention head shape");
        }
      }
      in *= c.heads[l];
    }
  } else if (!p.gat.empty()) {
    fail("graph layers present with use_gat off");
  }
  if (c.use_dcn) {
    if (static_cast<int>(p.dcn.cross.size()) != c.cross_layers ||
        static_cast<int>(p.dcn.deep.size()) != c.deep_layers) {
      fail("interaction layer count");
    }
    ValidateDcn(p.dcn, c.InteractionInputDim());
  } else if (!p.dcn.cross.empty() || !p.dcn.deep.empty()) {
    fail("interaction layers present with use_dcn off");
  }
  if (p.score_head.rows() != c.ScoreInputDim() || p.score_head.cols() != 1) fail("score head");
  if (p.attribute_head.rows() != c.GraphOutputDim() || p.attribute_head.cols() != 1) {
    fail("attribute head");
  }
}

ForwardTrace Model::Forward(const graph::PairGraph& graph, const GraphInputs& inputs,
                            const ModelParams& params) const {
  CheckParams(params);
  const ModelConfig& c = config_;
  const int m = graph.num_attributes();
  const int s = graph.num_sentences();
  if (inputs.attributes.rows() != m || inputs.attributes.cols() != c.attribute_input_dim ||
      inputs.sentences.rows() != s || inputs.sentences.cols() != c.sentence_input_dim) {
    throw ShapeError("graph inputs do not match graph size or declared feature dims");
  }
  if (graph.user() >= params.user_table.rows() || graph.item() >= params.item_table.rows()) {
    throw ShapeError("graph user/item outside embedding tables");
  }

  ForwardTrace t;
  t.user = graph.user();
  t.item = graph.item();
  t.num_attributes = m;
  t.num_sentences = s;
  t.inputs = inputs;
  t.param_scalars = params.NumScalars();
  const int n = graph.num_nodes();
  t.neighbors.resize(n);
  for (int i = 0; i < n; ++i) t.neighbors[i] = graph.Neighbors(i);
  t.sentence_attributes.resize(s);
  for (int k = 0; k < s; ++k) {
    for (int node : graph.Adjacency(graph.SentenceNode(k))) {
      t.sentence_attributes[k].push_back(node - 2);
    }
  }

  t.h0.resize(n, c.node_dim);
  t.h0.row(0) = params.user_table.row(t.user);
  t.h0.row(1) = params.item_table.row(t.item);
  if (m > 0) {
    t.h0.middleRows(2, m) = params.attribute_projection.size() > 0
                                ? Eigen::MatrixXd(inputs.attributes * params.attribute_projection.transpose())
                                : inputs.attributes;
  }
  t.h0.bottomRows(s) = params.sentence_projection.size() > 0
                           ? Eigen::MatrixXd(inputs.sentences * params.sentence_projection.transpose())
                           : inputs.sentences;

  const int dl = c.GraphOutputDim();
  if (c.use_gat) {
    const Eigen::MatrixXd* h = &t.h0;
    for (const auto& layer : params.gat) {
      t.layers.push_back(GatLayerForward(*h, t.neighbors, layer, c.gat_activation, c.leaky_slope));
      h = &t.layers.back().output;
    }
    t.final_states = *h;
    t.x0.resize(s, 3 * dl);
    for (int k = 0; k < s; ++k) {
      t.x0.row(k) << t.final_states.row(0), t.final_states.row(1),
          t.final_states.row(2 + m + k);
    }
  } else {
    t.final_states = t.h0;
    t.x0.resize(s, 4 * dl);
    for (int k = 0; k < s; ++k) {
      Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(dl);
      for (int a : t.sentence_attributes[k]) mean += t.h0.row(2 + a);
      mean /= static_cast<double>(t.sentence_attributes[k].size());
      t.x0.row(k) << t.h0.row(0), t.h0.row(1), t.h0.row(2 + m + k), mean;
    }
  }

  if (c.use_dcn) {
    t.dcn = DcnForward(t.x0, params.dcn);
    t.score_input = t.dcn.output;
  } else {
    t.score_input = t.x0;
  }
  t.scores = t.score_input * params.score_head.col(0);
  const Eigen::VectorXd logits = t.final_states.middleRows(2, m) * params.attribute_head.col(0);
  t.attribute_probs = logits.unaryExpr(&Sigmoid);
  return t;
}

Gradients Model::Backward(const ForwardTrace& t, const ModelParams& params,
                          const Eigen::VectorXd& d_scores,
                          const Eigen::VectorXd& d_probs) const {
  CheckParams(params);
  if (t.param_scalars != params.NumScalars()) {
    throw ShapeError("forward trace was produced with different parameters");
  }
  const ModelConfig& c = config_;
  const int m = t.num_attributes;
  const int s = t.num_sentences;
  if (d_scores.size() != s || d_probs.size() != m) {
    throw ShapeError("upstream gradients do not match trace outputs");
  }

  Gradients grads;
  grads.net = ZerosLike(params);
  grads.net.user_table.resize(0, 0);
  grads.net.item_table.resize(0, 0);
  ModelParams& g = grads.net;

  g.score_head.col(0) = t.score_input.transpose() * d_scores;
  const Eigen::MatrixXd d_score_input = d_scores * params.score_head.col(0).transpose();

  Eigen::MatrixXd d_x0 = c.use_dcn ? DcnBackward(t.dcn, params.dcn, d_score_input, g.dcn)
                                   : d_score_input;

  const int dl = c.GraphOutputDim();
  Eigen::MatrixXd d_final = Eigen::MatrixXd::Zero(t.final_states.rows(), dl);
  // Attribute head: p = sigmoid(<w, h_f>).
  const Eigen::VectorXd d_logits =
      d_probs.cwiseProduct(t.attribute_probs.cwiseProduct(
          (1.0 - t.attribute_probs.array()).matrix()));
  const auto attr_states = t.final_states.middleRows(2, m);
  g.attribute_head.col(0) = attr_states.transpose() * d_logits;
  d_final.middleRows(2, m) += d_logits * params.attribute_head.col(0).transpose();

  for (int k = 0; k < s; ++k) {
    d_final.row(0) += d_x0.row(k).segment(0, dl);
    d_final.row(1) += d_x0.row(k).segment(dl, dl);
    d_final.row(2 + m + k) += d_x0.row(k).segment(2 * dl, dl);
    if (!c.use_gat) {
      const auto& attrs = t.sentence_attributes[k];
      const Eigen::RowVectorXd share =
          d_x0.row(k).segment(3 * dl, dl) / static_cast<double>(attrs.size());
      for (int a : attrs) d_final.row(2 + a) += share;
    }
  }

  Eigen::MatrixXd d_h0;
  if (c.use_gat) {
    Eigen::MatrixXd d_h = std::move(d_final);
    for (size_t l = params.gat.size(); l-- > 0;) {
      d_h = GatLayerBackward(t.layers[l], t.neighbors, params.gat[l], c.gat_activation,
                             c.leaky_slope, d_h, g.gat[l]);
    }
    d_h0 = std::move(d_h);
  } else {
    d_h0 = std::move(d_final);
  }

  grads.user = t.user;
  grads.user_row = d_h0.row(0).transpose();
  grads.item = t.item;
  grads.item_row = d_h0.row(1).transpose();
  if (params.attribute_projection.size() > 0 && m > 0) {
    g.attribute_projection = d_h0.middleRows(2, m).transpose() * t.inputs.attributes;
  }
  if (params.sentence_projection.size() > 0) {
    g.sentence_projection = d_h0.bottomRows(s).transpose() * t.inputs.sentences;
  }
  return grads;
}

}  // namespace graphex::model
