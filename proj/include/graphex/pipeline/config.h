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

#ifndef GRAPHEX_PIPELINE_CONFIG_H_
#define GRAPHEX_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "graphex/corpus/corpus.h"
#include "graphex/graph/pair_graph.h"
#include "graphex/model/params.h"
#include "graphex/selector/selection.h"
#include "graphex/training/trainer.h"

namespace graphex::pipeline {

struct Paths {
  std::filesystem::path reviews;
  std::filesystem::path lexicon;
  std::filesystem::path attribute_vectors;  // word-vector file; keys are words
  std::filesystem::path sentence_vectors;   // keys are corpus sentence ids
  std::filesystem::path workdir = "work";
};

struct Ablations {
  bool disable_gat = false;
  bool disable_dcn = false;
  bool disable_ilp = false;
  bool use_avg_word_embeddings = false;
};

struct PipelineConfig {
  Paths paths;
  uint64_t seed = 7;
  int workers = 1;
  corpus::CorpusOptions corpus;
  graph::GraphOptions graph;
  model::ModelConfig model;
  training::TrainConfig training;
  selector::SelectorConfig selection;
  Ablations ablations;

  // Relative paths in the file resolve against the file's directory. Unknown
  // keys are rejected. Throws ConfigError naming the field.
  static PipelineConfig FromJson(const nlohmann::json& j,
                                 const std::filesystem::path& base_dir = {});
  static PipelineConfig Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // Copies the shared seed, worker count and ablation switches into the
  // per-module configs. Call after any override.
  void Propagate();
  // Throws ConfigError naming the first invalid field.
  void Validate() const;

  // Hashes over everything that influences each stage's output, including
  // the bytes of the input files. Worker counts and the workdir are
  // excluded. Each hash covers its upstream stages.
  struct StageHashes {
    std::string preprocess;
    std::string train;
    std::string select;
  };
  StageHashes Hashes() const;
};

}  // namespace graphex::pipeline

#endif  // GRAPHEX_PIPELINE_CONFIG_H_
