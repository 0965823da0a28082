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

// graphex command-line entry point: preprocess, train, select, evaluate.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "graphex/common/error.h"
#include "graphex/common/log.h"
#include "graphex/metrics/report.h"
#include "graphex/pipeline/config.h"
#include "graphex/pipeline/stages.h"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> workdir;
  std::optional<uint64_t> seed;
  std::optional<int> workers;
  bool no_gat = false;
  bool no_dcn = false;
  bool no_ilp = false;
  bool avg_word_embeddings = false;
};

void AddCommon(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config, "Pipeline config (JSON)")->required()->check(CLI::ExistingFile);
  app->add_option("--workdir", o.workdir, "Output directory (overrides paths.workdir)");
  app->add_option("--seed", o.seed, "Random seed for the split and training");
  app->add_option("--workers", o.workers, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
  app->add_flag("--no-gat", o.no_gat, "Ablation: skip the graph attention layers");
  app->add_flag("--no-dcn", o.no_dcn, "Ablation: replace cross/deep layers by a linear head");
  app->add_flag("--no-ilp", o.no_ilp, "Ablation: take the top-K sentences by score");
  app->add_flag("--avg-word-embeddings", o.avg_word_embeddings,
                "Ablation: embed sentences by averaged word vectors");
}

graphex::pipeline::PipelineConfig Resolve(const Overrides& o) {
  auto c = graphex::pipeline::PipelineConfig::Load(o.config);
  if (o.workdir) c.paths.workdir = *o.workdir;
  if (o.seed) c.seed = *o.seed;
  if (o.workers) c.workers = *o.workers;
  c.ablations.disable_gat |= o.no_gat;
  c.ablations.disable_dcn |= o.no_dcn;
  c.ablations.disable_ilp |= o.no_ilp;
  c.ablations.use_avg_word_embeddings |= o.avg_word_embeddings;
  c.Propagate();
  c.Validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive explanation pipeline for recommendations"};
  app.require_subcommand(1);
  Overrides o;
  std::string resume, checkpoint, selections;

  auto* pre = app.add_subcommand("preprocess", "Build the corpus from reviews and a lexicon");
  AddCommon(pre, o);
  auto* train = app.add_subcommand("train", "Train the sentence scorer");
  AddCommon(train, o);
  train->add_option("--resume", resume, "Continue from an epoch checkpoint")
      ->check(CLI::ExistingFile);
  auto* select = app.add_subcommand("select", "Select explanation sentences for test pairs");
  AddCommon(select, o);
  select->add_option("--checkpoint", checkpoint, "Checkpoint to use instead of the best one")
      ->check(CLI::ExistingFile);
  auto* evaluate = app.add_subcommand("evaluate", "Score selections against test reviews");
  AddCommon(evaluate, o);
  evaluate->add_option("--selections", selections, "Selections file (default: workdir)")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = Resolve(o);
    if (pre->parsed()) {
      const auto s = graphex::pipeline::RunPreprocess(config);
      std::cout << "users\t" << s.users << "\nitems\t" << s.items << "\nreviews\t" << s.reviews
                << "\nsentences\t" << s.sentences << "\nattributes\t" << s.attributes << "\n";
    } else if (train->parsed()) {
      const auto r = graphex::pipeline::RunTrain(config, resume);
      std::cout << "best epoch " << r.best_epoch << ", validation BLEU-4 (smoothed) "
                << r.best_score << "\n";
    } else if (select->parsed()) {
      const auto records = graphex::pipeline::RunSelect(config, checkpoint);
      std::cout << records.size() << " selections written to "
                << graphex::pipeline::SelectionsPath(config).string() << "\n";
    } else if (evaluate->parsed()) {
      const auto e = graphex::pipeline::RunEvaluate(config, selections);
      std::cout << graphex::metrics::ReportToTable(e.report);
    }
  } catch (const graphex::Error& e) {
    graphex::Logger()->error("{}", e.what());
    return EXIT_FAILURE;
  } catch (const std::exception& e) {
    graphex::Logger()->error("unexpected failure: {}", e.what());
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
