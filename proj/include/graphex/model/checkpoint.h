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

#ifndef GRAPHEX_MODEL_CHECKPOINT_H_
#define GRAPHEX_MODEL_CHECKPOINT_H_

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphex/model/params.h"

namespace graphex::model {

struct NamedTensor {
  std::string name;
  Eigen::MatrixXd value;
};

// Binary named-tensor archive:
//   magic "GXCKPT01"
//   u64 length + config hash string
//   u64 length + metadata string (JSON)
//   u64 tensor count, then per tensor:
//     u64 length + name, i64 rows, i64 cols, rows*cols f64 in row-major order
// Integers and doubles are little-endian. Round trips are bit-exact.
struct Checkpoint {
  std::string config_hash;
  std::string metadata;
  std::vector<NamedTensor> tensors;
};

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint ReadCheckpoint(const std::filesystem::path& path);

// Appends every tensor of `params` as "<prefix><name>".
void ExportParams(const ModelParams& params, const std::string& prefix,
                  std::vector<NamedTensor>& out);

// Copies tensors named "<prefix><name>" into `params`, which must already
// have the expected shapes. Throws ShapeError on a missing tensor or a shape
// mismatch.
void ImportParams(const std::vector<NamedTensor>& tensors, const std::string& prefix,
                  ModelParams& params);

}  // namespace graphex::model

#endif  // GRAPHEX_MODEL_CHECKPOINT_H_
