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

#include "graphex/training/trainer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "graphex/common/error.h"
#include "graphex/common/hash.h"
#include "graphex/common/log.h"
#include "graphex/common/parallel.h"
#include "graphex/metrics/bleu.h"
#include "graphex/model/checkpoint.h"
#include "graphex/training/relevance.h"

namespace graphex::training {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kParamPrefix[] = "param.";
constexpr char kMomentPrefix[] = "adam.m.";
constexpr char kVariancePrefix[] = "adam.v.";

std::string CheckpointName(int epoch) { return fmt::format("epoch_{}.ckpt", epoch); }

std::string LogHeader() {
  return "# graphex training log\n"
         "# validation: top-5 sentences by score, concatenated, vs the ground-truth review\n"
         "# model selection: mean sentence BLEU-4 with add-one smoothing on zero-count orders >= 2\n"
         "# epoch\tloss\tloss_s\tloss_f\tbleu1\tbleu2\tbleu4\tselection_bleu4\tskipped_batches\n";
}

std::string LogLine(const EpochRecord& r) {
  return fmt::format("{}\t{:.10g}\t{:.10g}\t{:.10g}\t{:.10g}\t{:.10g}\t{:.10g}\t{:.10g}\t{}\n",
                     r.epoch, r.loss, r.loss_s, r.loss_f, r.validation.bleu1,
                     r.validation.bleu2, r.validation.bleu4, r.validation.selection,
                     r.skipped_batches);
}

json RecordToJson(const EpochRecord& r) {
  return {{"epoch", r.epoch},
          {"loss", r.loss},
          {"loss_s", r.loss_s},
          {"loss_f", r.loss_f},
          {"pairs", r.validation.pairs},
          {"bleu1", r.validation.bleu1},
          {"bleu2", r.validation.bleu2},
          {"bleu4", r.validation.bleu4},
          {"selection", r.validation.selection},
          {"skipped_batches", r.skipped_batches}};
}

EpochRecord RecordFromJson(const json& j) {
  EpochRecord r;
  r.epoch = j.at("epoch").get<int>();
  r.loss = j.at("loss").get<double>();
  r.loss_s = j.at("loss_s").get<double>();
  r.loss_f = j.at("loss_f").get<double>();
  r.validation.pairs = j.at("pairs").get<size_t>();
  r.validation.bleu1 = j.at("bleu1").get<double>();
  r.validation.bleu2 = j.at("bleu2").get<double>();
  r.validation.bleu4 = j.at("bleu4").get<double>();
  r.validation.selection = j.at("selection").get<double>();
  r.skipped_batches = j.at("skipped_batches").get<int>();
  return r;
}

void WriteTextAtomic(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ConfigError("training.lambda must lie in [0, 1]");
  if (batch_size < 1) throw ConfigError("training.batch_size must be >= 1");
  if (!(adam.learning_rate > 0.0)) throw ConfigError("training.learning_rate must be > 0");
  if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0) || !(adam.beta2 >= 0.0 && adam.beta2 < 1.0)) {
    throw ConfigError("training.adam betas must lie in [0, 1)");
  }
  if (!(adam.epsilon > 0.0)) throw ConfigError("training.adam_epsilon must be > 0");
  if (epochs < 1) throw ConfigError("training.epochs must be >= 1");
  if (pair_budget < 1) throw ConfigError("training.pair_budget must be >= 1");
  if (patience < 1) throw ConfigError("training.patience must be >= 1");
  if (validation_top_k < 1) throw ConfigError("training.validation_top_k must be >= 1");
}

GraphLoss EvaluateGraphLoss(const model::Model& model, const graph::PairGraph& graph,
                            const model::GraphInputs& inputs, const model::ModelParams& params,
                            const std::vector<double>& relevance,
                            const std::vector<IndexPair>& pairs, double lambda, bool balanced,
                            model::Gradients* grads) {
  const model::ForwardTrace trace = model.Forward(graph, inputs, params);
  const LossValue ls = PairwiseRankLoss(trace.scores, relevance, pairs);
  const LossValue lf = AttributeLoss(trace.attribute_probs, graph.attribute_labels(), balanced);
  GraphLoss out;
  out.ranking = ls.value;
  out.attribute = lf.value;
  out.total = CombinedLoss(ls.value, lf.value, lambda);
  if (grads != nullptr) {
    *grads = model.Backward(trace, params, lambda * ls.grad, (1.0 - lambda) * lf.grad);
  }
  return out;
}

std::vector<int> TopK(const Eigen::VectorXd& scores, int k) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  if (static_cast<int>(order.size()) > k) order.resize(k);
  return order;
}

Trainer::Trainer(const corpus::Corpus& corpus, const features::NodeFeatures& features,
                 const model::ModelConfig& model_config,
                 const graph::GraphOptions& graph_options, const TrainConfig& config)
    : corpus_(corpus),
      features_(features),
      model_(model_config),
      graph_options_(graph_options),
      config_(config) {
  config_.Validate();
  auto build = [&](const std::vector<ReviewIndex>& reviews, PoolMode mode) {
    std::vector<Example> out;
    for (ReviewIndex r : reviews) {
      const corpus::Review& rev = corpus_.review(r);
      try {
        out.push_back({r, graph::BuildPairGraph(corpus_, rev.user, rev.item, mode, r,
                                                graph_options_), {}});
      } catch (const graph::EmptyPoolError& e) {
        ++skipped_graphs_;
      }
    }
    return out;
  };
  train_ = build(corpus_.split().train, PoolMode::kTrain);
  valid_ = build(corpus_.split().valid, PoolMode::kEval);
  if (skipped_graphs_ > 0) Logger()->warn("{} pair(s) skipped: empty candidate pool", skipped_graphs_);

  ParallelFor(train_.size(), config_.workers, [&](size_t i) {
    Example& ex = train_[i];
    std::vector<const TokenSeq*> cands;
    for (SentenceIndex s : ex.graph.sentence_nodes()) cands.push_back(&corpus_.sentence(s).tokens);
    ex.relevance = RelevanceTargets(cands, corpus_.ReviewTokens(ex.target));
  });
  std::erase_if(train_, [](const Example& ex) { return ex.relevance.empty(); });

  for (const Example& ex : valid_) {
    TokenSeq ref;
    for (const TokenSeq& s : corpus_.ReviewTokens(ex.target)) ref.insert(ref.end(), s.begin(), s.end());
    valid_references_.push_back(std::move(ref));
  }
  Logger()->info("training graphs: {}, validation graphs: {}", train_.size(), valid_.size());
  if (valid_.empty()) Logger()->warn("no validation pairs; the first epoch is kept as best");
}

model::ModelParams Trainer::InitialParams() const {
  return model::InitParams(model_.config(), static_cast<int>(corpus_.users().size()),
                           static_cast<int>(corpus_.items().size()), config_.seed);
}

Eigen::VectorXd Trainer::Score(const graph::PairGraph& graph,
                               const model::ModelParams& params) const {
  return model_.Forward(graph, features_.Gather(graph), params).scores;
}

ValidationScores Trainer::Validate(const model::ModelParams& params) const {
  std::vector<metrics::BleuPair> pairs(valid_.size());
  ParallelFor(valid_.size(), config_.workers, [&](size_t i) {
    const Example& ex = valid_[i];
    const Eigen::VectorXd scores = Score(ex.graph, params);
    if (!scores.allFinite()) throw Error("non-finite validation score");
    TokenSeq cand;
    for (int k : TopK(scores, config_.validation_top_k)) {
      const TokenSeq& t = corpus_.sentence(ex.graph.sentence_nodes()[k]).tokens;
      cand.insert(cand.end(), t.begin(), t.end());
    }
    pairs[i] = {std::move(cand), {valid_references_[i]}};
  });
  ValidationScores out;
  out.pairs = pairs.size();
  out.bleu1 = metrics::CorpusBleu(pairs, 1);
  out.bleu2 = metrics::CorpusBleu(pairs, 2);
  out.bleu4 = metrics::CorpusBleu(pairs, 4);
  double sum = 0.0;
  for (const auto& [cand, refs] : pairs) sum += metrics::SentenceBleu(cand, refs, 4);
  out.selection = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
  if (std::isnan(out.selection)) throw Error("validation BLEU is NaN");
  return out;
}

EpochRecord Trainer::RunEpoch(int epoch, model::ModelParams& params, AdamState& adam) const {
  std::vector<size_t> order(train_.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(DeriveSeed(config_.seed, 1, static_cast<uint64_t>(epoch)));
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  EpochRecord rec;
  rec.epoch = epoch;
  size_t counted = 0;
  const size_t bs = static_cast<size_t>(config_.batch_size);
  for (size_t start = 0; start < order.size(); start += bs) {
    const size_t count = std::min(bs, order.size() - start);
    std::vector<GraphLoss> losses(count);
    std::vector<model::Gradients> grads(count);
    ParallelFor(count, config_.workers, [&](size_t b) {
      const size_t idx = order[start + b];
      const Example& ex = train_[idx];
      const auto pairs = SamplePairs(ex.relevance, config_.pair_budget, config_.all_pairs,
                                     DeriveSeed(config_.seed, 2, static_cast<uint64_t>(epoch), idx));
      losses[b] = EvaluateGraphLoss(model_, ex.graph, features_.Gather(ex.graph), params,
                                    ex.relevance, pairs, config_.lambda, config_.balanced_bce,
                                    &grads[b]);
    });
    model::ModelParams total = model::ZerosLike(params);
    for (size_t b = 0; b < count; ++b) grads[b].AccumulateInto(total, 1.0 / static_cast<double>(count));
    try {
      AdamStep(params, total, adam, config_.adam);
    } catch (const NonFiniteGradient& e) {
      Logger()->error("epoch {}: batch at offset {} skipped: {}", epoch, start, e.what());
      ++rec.skipped_batches;
      continue;
    }
    for (const GraphLoss& l : losses) {
      rec.loss += l.total;
      rec.loss_s += l.ranking;
      rec.loss_f += l.attribute;
    }
    counted += count;
  }
  if (counted > 0) {
    rec.loss /= static_cast<double>(counted);
    rec.loss_s /= static_cast<double>(counted);
    rec.loss_f /= static_cast<double>(counted);
  }
  rec.validation = Validate(params);
  return rec;
}

TrainResult Trainer::Run(const RunOptions& options) const {
  if (train_.empty()) throw Error("no training graphs");
  TrainResult result;
  model::ModelParams params = InitialParams();
  AdamState adam = AdamState::For(params);
  int first_epoch = 1;
  int since_best = 0;
  result.best_score = -1.0;

  if (!options.resume.empty()) {
    const model::Checkpoint ckpt = model::ReadCheckpoint(options.resume);
    if (ckpt.config_hash != options.config_hash) {
      throw ConfigError("checkpoint " + options.resume.string() + " was written with a different config");
    }
    model::ImportParams(ckpt.tensors, kParamPrefix, params);
    model::ImportParams(ckpt.tensors, kMomentPrefix, adam.m);
    model::ImportParams(ckpt.tensors, kVariancePrefix, adam.v);
    const json meta = json::parse(ckpt.metadata);
    adam.step = meta.at("adam_step").get<int64_t>();
    first_epoch = meta.at("epoch").get<int>() + 1;
    result.best_epoch = meta.at("best_epoch").get<int>();
    result.best_score = meta.at("best_score").get<double>();
    since_best = meta.at("epochs_since_best").get<int>();
    for (const json& r : meta.at("history")) result.history.push_back(RecordFromJson(r));
    if (!options.out_dir.empty()) {
      const fs::path best = options.out_dir / CheckpointName(result.best_epoch);
      result.best_params = params;
      model::ImportParams(model::ReadCheckpoint(best).tensors, kParamPrefix, result.best_params);
    } else {
      result.best_params = params;
    }
    Logger()->info("resuming after epoch {}", first_epoch - 1);
  }

  std::ofstream log;
  if (!options.out_dir.empty()) {
    fs::create_directories(options.out_dir);
    std::string text = LogHeader();
    for (const EpochRecord& r : result.history) text += LogLine(r);
    WriteTextAtomic(options.out_dir / "metrics.log", text);
    log.open(options.out_dir / "metrics.log", std::ios::app);
  }

  for (int epoch = first_epoch; epoch <= config_.epochs; ++epoch) {
    if (since_best >= config_.patience) {
      result.stopped_early = true;
      break;
    }
    const EpochRecord rec = RunEpoch(epoch, params, adam);
    result.history.push_back(rec);
    if (rec.validation.selection > result.best_score) {
      result.best_score = rec.validation.selection;
      result.best_epoch = epoch;
      result.best_params = params;
      since_best = 0;
    } else {
      ++since_best;
    }
    Logger()->info("epoch {}: loss {:.6f} (L_s {:.6f}, L_f {:.6f}), valid BLEU-1/2/4 {:.4f}/{:.4f}/{:.4f}",
                   epoch, rec.loss, rec.loss_s, rec.loss_f, rec.validation.bleu1,
                   rec.validation.bleu2, rec.validation.bleu4);
    if (options.out_dir.empty()) continue;

    json history = json::array();
    for (const EpochRecord& r : result.history) history.push_back(RecordToJson(r));
    const json meta = {{"epoch", epoch},
                       {"adam_step", adam.step},
                       {"best_epoch", result.best_epoch},
                       {"best_score", result.best_score},
                       {"epochs_since_best", since_best},
                       {"history", history}};
    model::Checkpoint ckpt{options.config_hash, meta.dump(), {}};
    model::ExportParams(params, kParamPrefix, ckpt.tensors);
    model::ExportParams(adam.m, kMomentPrefix, ckpt.tensors);
    model::ExportParams(adam.v, kVariancePrefix, ckpt.tensors);
    model::WriteCheckpoint(options.out_dir / CheckpointName(epoch), ckpt);
    log << LogLine(rec) << std::flush;
    const json best = {{"epoch", result.best_epoch},
                       {"checkpoint", CheckpointName(result.best_epoch)},
                       {"selection_bleu4", result.best_score},
                       {"config_hash", options.config_hash}};
    WriteTextAtomic(options.out_dir / "best.json", best.dump(2) + "\n");
  }
  result.final_params = params;
  return result;
}

model::ModelParams LoadTrainedParams(const fs::path& checkpoint, const model::ModelConfig& config,
                                     int num_users, int num_items,
                                     const std::string& expected_hash) {
  const model::Checkpoint ckpt = model::ReadCheckpoint(checkpoint);
  if (ckpt.config_hash != expected_hash) {
    throw ConfigError("checkpoint " + checkpoint.string() +
                      " does not match the current model/training config; retrain");
  }
  model::ModelParams params = model::InitParams(config, num_users, num_items, 0);
  model::ImportParams(ckpt.tensors, kParamPrefix, params);
  return params;
}

}  // namespace graphex::training
