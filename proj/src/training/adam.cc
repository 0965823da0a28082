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

#include "graphex/training/adam.h"

#include <cmath>
#include <string>
#include <vector>

namespace graphex::training {

AdamState AdamState::For(const model::ModelParams& params) {
  return {model::ZerosLike(params), model::ZerosLike(params), 0};
}

void AdamStep(model::ModelParams& params, const model::ModelParams& grads, AdamState& state,
              const AdamConfig& config) {
  std::vector<const Eigen::MatrixXd*> g;
  grads.ForEach([&](const std::string& name, const Eigen::MatrixXd& t) {
    if (!t.allFinite()) throw NonFiniteGradient("non-finite gradient in " + name);
    g.push_back(&t);
  });
  std::vector<Eigen::MatrixXd*> p, m, v;
  params.ForEach([&](const std::string&, Eigen::MatrixXd& t) { p.push_back(&t); });
  state.m.ForEach([&](const std::string&, Eigen::MatrixXd& t) { m.push_back(&t); });
  state.v.ForEach([&](const std::string&, Eigen::MatrixXd& t) { v.push_back(&t); });
  if (g.size() != p.size() || m.size() != p.size() || v.size() != p.size()) {
    throw ShapeError("optimizer state does not mirror the parameters");
  }
  for (size_t i = 0; i < p.size(); ++i) {
    if (g[i]->rows() != p[i]->rows() || g[i]->cols() != p[i]->cols() ||
        m[i]->rows() != p[i]->rows() || m[i]->cols() != p[i]->cols()) {
      throw ShapeError("gradient or moment shape does not match its parameter");
    }
  }

  ++state.step;
  const double c1 = 1.0 - std::pow(config.beta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(config.beta2, static_cast<double>(state.step));
  for (size_t i = 0; i < p.size(); ++i) {
    auto gi = g[i]->array();
    m[i]->array() = config.beta1 * m[i]->array() + (1.0 - config.beta1) * gi;
    v[i]->array() = config.beta2 * v[i]->array() + (1.0 - config.beta2) * gi.square();
    p[i]->array() -= config.learning_rate * (m[i]->array() / c1) /
                     ((v[i]->array() / c2).sqrt() + config.epsilon);
  }
}

}  // namespace graphex::training
