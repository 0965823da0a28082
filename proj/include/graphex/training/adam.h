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

#ifndef GRAPHEX_TRAINING_ADAM_H_
#define GRAPHEX_TRAINING_ADAM_H_

#include <cstdint>

#include "graphex/common/error.h"
#include "graphex/model/params.h"

namespace graphex::training {

struct AdamConfig {
  double learning_rate = 2e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  model::ModelParams m;
  model::ModelParams v;
  int64_t step = 0;

  static AdamState For(const model::ModelParams& params);
};

class NonFiniteGradient : public Error {
 public:
  using Error::Error;
};

// One bias-corrected Adam update. Throws NonFiniteGradient, naming the first
// offending tensor, before modifying params or state.
void AdamStep(model::ModelParams& params, const model::ModelParams& grads, AdamState& state,
              const AdamConfig& config);

}  // namespace graphex::training

#endif  // GRAPHEX_TRAINING_ADAM_H_
