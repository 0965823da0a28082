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

#include "graphex/model/params.h"

#include <cmath>
#include <map>
#include <random>

#include "graphex/common/error.h"
#include "graphex/common/hash.h"

namespace graphex::model {

Activation ParseActivation(const std::string& name) {
  if (name == "elu") return Activation::kElu;
  if (name == "relu") return Activation::kRelu;
  if (name == "sigmoid") return Activation::kSigmoid;
  if (name == "identity") return Activation::kIdentity;
  throw ConfigError("unknown gat_activation '" + name + "'");
}

std::string ActivationName(Activation a) {
  switch (a) {
    case Activation::kElu: return "elu";
    case Activation::kRelu: return "relu";
    case Activation::kSigmoid: return "sigmoid";
    case Activation::kIdentity: return "identity";
  }
  return "?";
}

int ModelConfig::GraphOutputDim() const {
  if (!use_gat) return node_dim;
  int dim = node_dim;
  for (int h : heads) dim *= h;
  return dim;
}

int ModelConfig::InteractionInputDim() const {
  // Without graph layers the sentence row also carries the mean of its
  // attribute inputs.
  return use_gat ? 3 * GraphOutputDim() : 4 * node_dim;
}

int ModelConfig::ScoreInputDim() const {
  const int d = InteractionInputDim();
  if (!use_dcn) return d;
  return d + (deep_layers > 0 ? deep_dim : d);
}

void ModelConfig::Validate() const {
  if (node_dim <= 0 || attention_dim <= 0) throw ConfigError("model dims must be positive");
  if (attribute_input_dim <= 0 || sentence_input_dim <= 0) {
    throw ConfigError("input feature dims must be positive");
  }
  if (use_gat) {
    if (heads.empty()) throw ConfigError("at least one graph attention layer is required");
    for (int h : heads) {
      if (h <= 0) throw ConfigError("head counts must be positive");
    }
  }
  if (cross_layers < 0 || deep_layers < 0) throw ConfigError("layer counts must be >= 0");
  if (deep_layers > 0 && deep_dim <= 0) throw ConfigError("deep_dim must be positive");
  if (leaky_slope < 0) throw ConfigError("leaky_slope must be >= 0");
}

Eigen::MatrixXd UniformMatrix(int rows, int cols, double scale, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd m(rows, cols);
  // Row-major fill so the values do not depend on Eigen's storage order.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      m(r, c) = scale * (2.0 * u - 1.0);
    }
  }
  return m;
}

namespace {

Eigen::MatrixXd Glorot(int rows, int cols, uint64_t seed) {
  const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
  return UniformMatrix(rows, cols, bound, seed);
}

std::vector<std::pair<std::string, Eigen::MatrixXd*>> Collect(ModelParams& p) {
  std::vector<std::pair<std::string, Eigen::MatrixXd*>> out;
  p.ForEach([&](const std::string& name, Eigen::MatrixXd& t) { out.emplace_back(name, &t); });
  return out;
}

}  // namespace

ModelParams InitParams(const ModelConfig& config, int num_users, int num_items,
                       uint64_t seed) {
  config.Validate();
  uint64_t stream = 0;
  auto next = [&] { return DeriveSeed(seed, ++stream); };

  ModelParams p;
  p.user_table = UniformMatrix(num_users, config.node_dim, config.embedding_init_scale, next());
  p.item_table = UniformMatrix(num_items, config.node_dim, config.embedding_init_scale, next());
  if (config.attribute_input_dim != config.node_dim) {
    p.attribute_projection = Glorot(config.node_dim, config.attribute_input_dim, next());
  }
  if (config.sentence_input_dim != config.node_dim) {
    p.sentence_projection = Glorot(config.node_dim, config.sentence_input_dim, next());
  }
  if (config.use_gat) {
    int in_dim = config.node_dim;
    for (int heads : config.heads) {
      GatLayerParams layer;
      for (int h = 0; h < heads; ++h) {
        GatHeadParams head;
        head.w_query = Glorot(config.attention_dim, in_dim, next());
        head.w_key = Glorot(config.attention_dim, in_dim, next());
        head.attention = Glorot(2 * config.attention_dim, 1, next());
        layer.heads.push_back(std::move(head));
      }
      p.gat.push_back(std::move(layer));
      in_dim *= heads;
    }
  }
  const int d = config.InteractionInputDim();
  if (config.use_dcn) {
    for (int l = 0; l < config.cross_layers; ++l) {
      CrossLayerParams cross;
      cross.weight = Glorot(d, 1, next());
      cross.bias = Eigen::MatrixXd::Zero(d, 1);
      p.dcn.cross.push_back(std::move(cross));
    }
    int in_dim = d;
    for (int l = 0; l < config.deep_layers; ++l) {
      DeepLayerParams deep;
      deep.weight = Glorot(config.deep_dim, in_dim, next());
      deep.bias = Eigen::MatrixXd::Zero(config.deep_dim, 1);
      p.dcn.deep.push_back(std::move(deep));
      in_dim = config.deep_dim;
    }
  }
  p.score_head = Glorot(config.ScoreInputDim(), 1, next());
  p.attribute_head = Glorot(config.GraphOutputDim(), 1, next());
  return p;
}

size_t ModelParams::NumTensors() const {
  size_t n = 0;
  ForEach([&](const std::string&, const Eigen::MatrixXd&) { ++n; });
  return n;
}

size_t ModelParams::NumScalars() const {
  size_t n = 0;
  ForEach([&](const std::string&, const Eigen::MatrixXd& t) { n += t.size(); });
  return n;
}

bool ModelParams::SameShapes(const ModelParams& other) const {
  std::vector<std::tuple<std::string, Eigen::Index, Eigen::Index>> a, b;
  ForEach([&](const std::string& n, const Eigen::MatrixXd& t) { a.emplace_back(n, t.rows(), t.cols()); });
  other.ForEach([&](const std::string& n, const Eigen::MatrixXd& t) { b.emplace_back(n, t.rows(), t.cols()); });
  return a == b;
}

bool ModelParams::operator==(const ModelParams& other) const {
  if (!SameShapes(other)) return false;
  std::vector<const Eigen::MatrixXd*> a, b;
  ForEach([&](const std::string&, const Eigen::MatrixXd& t) { a.push_back(&t); });
  other.ForEach([&](const std::string&, const Eigen::MatrixXd& t) { b.push_back(&t); });
  for (size_t i = 0; i < a.size(); ++i) {
    if (*a[i] != *b[i]) return false;
  }
  return true;
}

ModelParams ZerosLike(const ModelParams& like) {
  ModelParams z = like;
  z.ForEach([](const std::string&, Eigen::MatrixXd& t) { t.setZero(); });
  return z;
}

void Gradients::AccumulateInto(ModelParams& full, double scale) const {
  if (user >= 0 && user_row.size() > 0) full.user_table.row(user) += scale * user_row.transpose();
  if (item >= 0 && item_row.size() > 0) full.item_table.row(item) += scale * item_row.transpose();
  std::map<std::string, Eigen::MatrixXd*> targets;
  for (auto& [name, t] : Collect(full)) targets.emplace(name, t);
  const_cast<ModelParams&>(net).ForEach([&](const std::string& name, Eigen::MatrixXd& g) {
    auto it = targets.find(name);
    if (it == targets.end() || it->second->rows() != g.rows() || it->second->cols() != g.cols()) {
      throw ShapeError("gradient tensor '" + name + "' does not match parameters");
    }
    *it->second += scale * g;
  });
}

}  // namespace graphex::model
