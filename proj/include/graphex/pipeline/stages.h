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

#ifndef GRAPHEX_PIPELINE_STAGES_H_
#define GRAPHEX_PIPELINE_STAGES_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphex/corpus/corpus.h"
#include "graphex/features/node_features.h"
#include "graphex/metrics/report.h"
#include "graphex/pipeline/config.h"
#include "graphex/selector/selection.h"
#include "graphex/training/trainer.h"

namespace graphex::pipeline {

// Workdir layout.
std::filesystem::path CorpusDir(const PipelineConfig& config);     // corpus/
std::filesystem::path TrainDir(const PipelineConfig& config);      // train/
std::filesystem::path SelectionsPath(const PipelineConfig& config);  // selections.tsv
std::filesystem::path ReportJsonPath(const PipelineConfig& config);  // report.json
std::filesystem::path ReportTextPath(const PipelineConfig& config);  // report.txt

struct SelectionRecord {
  std::string user;
  std::string item;
  std::vector<SentenceIndex> sentences;
  double objective = 0.0;
  selector::SolverKind solver = selector::SolverKind::kExact;
};

// Tab-separated: a "# config_hash <hash>" line, a "# user item ..." column
// line, then one record per pair with comma-separated sentence ids.
void WriteSelections(const std::filesystem::path& path, const std::string& config_hash,
                     const std::vector<SelectionRecord>& records);
// `config_hash` receives the recorded hash, or stays empty without one.
std::vector<SelectionRecord> ReadSelections(const std::filesystem::path& path,
                                            std::string* config_hash);

// Loads the preprocessed corpus, refusing one written under another config.
corpus::Corpus LoadStageCorpus(const PipelineConfig& config);

// Input node features per the configured vector files and ablations.
features::NodeFeatures BuildFeatures(const PipelineConfig& config, const corpus::Corpus& corpus);
// Model config with input widths taken from `features`.
model::ModelConfig ModelConfigFor(const PipelineConfig& config,
                                  const features::NodeFeatures& features);

corpus::CorpusStats RunPreprocess(const PipelineConfig& config);
training::TrainResult RunTrain(const PipelineConfig& config,
                               const std::filesystem::path& resume = {});
// Uses the best checkpoint unless `checkpoint` is given. Returns the records
// written.
std::vector<SelectionRecord> RunSelect(const PipelineConfig& config,
                                       const std::filesystem::path& checkpoint = {});

struct Evaluation {
  metrics::EvalReport report;
  size_t missing_pairs = 0;  // test pairs without a selection record
};
Evaluation RunEvaluate(const PipelineConfig& config,
                       const std::filesystem::path& selections = {});

}  // namespace graphex::pipeline

#endif  // GRAPHEX_PIPELINE_STAGES_H_
