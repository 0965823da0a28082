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

#include "graphex/pipeline/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "graphex/common/error.h"
#include "graphex/common/hash.h"

namespace graphex::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Reads fields of one JSON object and rejects keys nobody asked for.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + " must be an object");
  }

  template <typename T>
  void Get(const std::string& key, T& out) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(Field(key) + " has the wrong type");
    }
  }

  void GetPath(const std::string& key, fs::path& out, const fs::path& base) {
    std::string s;
    Get(key, s);
    if (s.empty()) return;
    fs::path p(s);
    out = p.is_relative() && !base.empty() ? base / p : p;
  }

  Section Child(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    static const json kEmpty = json::object();
    return Section(it == j_.end() ? kEmpty : *it, Field(key));
  }

  void Finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) throw ConfigError("unknown config field " + Field(key));
    }
  }

  std::string Field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string FileDigest(const fs::path& path) {
  if (path.empty()) return "";
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing";
  std::ostringstream ss;
  ss << in.rdbuf();
  return HexDigest(Fnv1a64(ss.str()));
}

std::string MatchModeName(corpus::MatchMode m) {
  return m == corpus::MatchMode::kExact ? "exact" : "lowercase";
}

}  // namespace

PipelineConfig PipelineConfig::FromJson(const json& j, const fs::path& base_dir) {
  PipelineConfig c;
  Section root(j, "");
  {
    Section s = root.Child("paths");
    s.GetPath("reviews", c.paths.reviews, base_dir);
    s.GetPath("lexicon", c.paths.lexicon, base_dir);
    s.GetPath("attribute_vectors", c.paths.attribute_vectors, base_dir);
    s.GetPath("sentence_vectors", c.paths.sentence_vectors, base_dir);
    s.GetPath("workdir", c.paths.workdir, base_dir);
    s.Finish();
  }
  root.Get("seed", c.seed);
  root.Get("workers", c.workers);
  {
    Section s = root.Child("corpus");
    s.Get("rating_threshold", c.corpus.rating_threshold);
    s.Get("min_activity", c.corpus.min_activity);
    s.Get("vocab_size", c.corpus.vocab_size);
    std::vector<double> ratios{c.corpus.ratios.train, c.corpus.ratios.valid, c.corpus.ratios.test};
    s.Get("split_ratios", ratios);
    if (ratios.size() != 3) throw ConfigError("corpus.split_ratios must hold three values");
    c.corpus.ratios = {ratios[0], ratios[1], ratios[2]};
    std::string match = MatchModeName(c.corpus.match_mode);
    s.Get("lexicon_match", match);
    if (match == "exact") {
      c.corpus.match_mode = corpus::MatchMode::kExact;
    } else if (match == "lowercase") {
      c.corpus.match_mode = corpus::MatchMode::kLowercase;
    } else {
      throw ConfigError("corpus.lexicon_match must be 'exact' or 'lowercase'");
    }
    s.Finish();
  }
  {
    Section s = root.Child("graph");
    s.Get("self_loops", c.graph.self_loops);
    s.Get("restrict_to_item_attributes", c.graph.restrict_to_item_attributes);
    s.Finish();
  }
  {
    Section s = root.Child("model");
    s.Get("node_dim", c.model.node_dim);
    s.Get("attention_dim", c.model.attention_dim);
    s.Get("heads", c.model.heads);
    s.Get("cross_layers", c.model.cross_layers);
    s.Get("deep_layers", c.model.deep_layers);
    s.Get("deep_dim", c.model.deep_dim);
    s.Get("leaky_slope", c.model.leaky_slope);
    std::string act = model::ActivationName(c.model.gat_activation);
    s.Get("gat_activation", act);
    c.model.gat_activation = model::ParseActivation(act);
    s.Get("embedding_init_scale", c.model.embedding_init_scale);
    s.Finish();
  }
  {
    Section s = root.Child("training");
    s.Get("lambda", c.training.lambda);
    s.Get("batch_size", c.training.batch_size);
    s.Get("learning_rate", c.training.adam.learning_rate);
    s.Get("adam_beta1", c.training.adam.beta1);
    s.Get("adam_beta2", c.training.adam.beta2);
    s.Get("adam_epsilon", c.training.adam.epsilon);
    s.Get("epochs", c.training.epochs);
    s.Get("pair_budget", c.training.pair_budget);
    s.Get("all_pairs", c.training.all_pairs);
    s.Get("balanced_bce", c.training.balanced_bce);
    s.Get("patience", c.training.patience);
    s.Get("validation_top_k", c.training.validation_top_k);
    s.Finish();
  }
  {
    Section s = root.Child("selection");
    s.Get("k", c.selection.k);
    s.Get("alpha", c.selection.alpha);
    s.Get("pool", c.selection.pool);
    s.Get("exact_cap", c.selection.exact_cap);
    s.Finish();
  }
  {
    Section s = root.Child("ablations");
    s.Get("disable_gat", c.ablations.disable_gat);
    s.Get("disable_dcn", c.ablations.disable_dcn);
    s.Get("disable_ilp", c.ablations.disable_ilp);
    s.Get("use_avg_word_embeddings", c.ablations.use_avg_word_embeddings);
    s.Finish();
  }
  root.Finish();
  c.Propagate();
  return c;
}

PipelineConfig PipelineConfig::Load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return FromJson(j, path.parent_path());
}

json PipelineConfig::ToJson() const {
  const auto& r = corpus.ratios;
  return {
      {"paths",
       {{"reviews", paths.reviews.string()},
        {"lexicon", paths.lexicon.string()},
        {"attribute_vectors", paths.attribute_vectors.string()},
        {"sentence_vectors", paths.sentence_vectors.string()},
        {"workdir", paths.workdir.string()}}},
      {"seed", seed},
      {"workers", workers},
      {"corpus",
       {{"rating_threshold", corpus.rating_threshold},
        {"min_activity", corpus.min_activity},
        {"vocab_size", corpus.vocab_size},
        {"split_ratios", {r.train, r.valid, r.test}},
        {"lexicon_match", MatchModeName(corpus.match_mode)}}},
      {"graph",
       {{"self_loops", graph.self_loops},
        {"restrict_to_item_attributes", graph.restrict_to_item_attributes}}},
      {"model",
       {{"node_dim", model.node_dim},
        {"attention_dim", model.attention_dim},
        {"heads", model.heads},
        {"cross_layers", model.cross_layers},
        {"deep_layers", model.deep_layers},
        {"deep_dim", model.deep_dim},
        {"leaky_slope", model.leaky_slope},
        {"gat_activation", model::ActivationName(model.gat_activation)},
        {"embedding_init_scale", model.embedding_init_scale}}},
      {"training",
       {{"lambda", training.lambda},
        {"batch_size", training.batch_size},
        {"learning_rate", training.adam.learning_rate},
        {"adam_beta1", training.adam.beta1},
        {"adam_beta2", training.adam.beta2},
        {"adam_epsilon", training.adam.epsilon},
        {"epochs", training.epochs},
        {"pair_budget", training.pair_budget},
        {"all_pairs", training.all_pairs},
        {"balanced_bce", training.balanced_bce},
        {"patience", training.patience},
        {"validation_top_k", training.validation_top_k}}},
      {"selection",
       {{"k", selection.k},
        {"alpha", selection.alpha},
        {"pool", selection.pool},
        {"exact_cap", selection.exact_cap}}},
      {"ablations",
       {{"disable_gat", ablations.disable_gat},
        {"disable_dcn", ablations.disable_dcn},
        {"disable_ilp", ablations.disable_ilp},
        {"use_avg_word_embeddings", ablations.use_avg_word_embeddings}}},
  };
}

void PipelineConfig::Propagate() {
  corpus.seed = seed;
  training.seed = seed;
  training.workers = workers;
  model.use_gat = !ablations.disable_gat;
  model.use_dcn = !ablations.disable_dcn;
  selection.use_ilp = !ablations.disable_ilp;
}

void PipelineConfig::Validate() const {
  if (paths.reviews.empty()) throw ConfigError("paths.reviews is required");
  if (paths.lexicon.empty()) throw ConfigError("paths.lexicon is required");
  if (paths.workdir.empty()) throw ConfigError("paths.workdir is required");
  if (paths.attribute_vectors.empty() && paths.sentence_vectors.empty()) {
    throw ConfigError("paths.attribute_vectors or paths.sentence_vectors is required");
  }
  if (ablations.use_avg_word_embeddings && paths.attribute_vectors.empty()) {
    throw ConfigError("ablations.use_avg_word_embeddings needs paths.attribute_vectors");
  }
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (corpus.min_activity < 1) throw ConfigError("corpus.min_activity must be >= 1");
  if (corpus.vocab_size < 1) throw ConfigError("corpus.vocab_size must be >= 1");
  const auto& r = corpus.ratios;
  if (r.train <= 0 || r.valid < 0 || r.test < 0 || std::abs(r.train + r.valid + r.test - 1.0) > 1e-9) {
    throw ConfigError("corpus.split_ratios must be non-negative and sum to 1");
  }
  model::ModelConfig m = model;
  try {
    m.Validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  training.Validate();
  if (selection.k < 1) throw ConfigError("selection.k must be >= 1");
  if (!(selection.alpha >= 0.0)) throw ConfigError("selection.alpha must be >= 0");
  if (selection.pool < 1) throw ConfigError("selection.pool must be >= 1");
  if (selection.exact_cap < 1) throw ConfigError("selection.exact_cap must be >= 1");
}

PipelineConfig::StageHashes PipelineConfig::Hashes() const {
  const json j = ToJson();
  StageHashes h;
  const json pre = {{"corpus", j["corpus"]},
                    {"seed", seed},
                    {"reviews", FileDigest(paths.reviews)},
                    {"lexicon", FileDigest(paths.lexicon)}};
  h.preprocess = HexDigest(Fnv1a64(pre.dump()));
  json abl = j["ablations"];
  abl.erase("disable_ilp");
  const json train = {{"upstream", h.preprocess},
                      {"graph", j["graph"]},
                      {"model", j["model"]},
                      {"training", j["training"]},
                      {"ablations", abl},
                      {"attribute_vectors", FileDigest(paths.attribute_vectors)},
                      {"sentence_vectors", FileDigest(paths.sentence_vectors)}};
  h.train = HexDigest(Fnv1a64(train.dump()));
  const json select = {{"upstream", h.train},
                       {"selection", j["selection"]},
                       {"disable_ilp", ablations.disable_ilp}};
  h.select = HexDigest(Fnv1a64(select.dump()));
  return h;
}

}  // namespace graphex::pipeline
