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

#include "graphex/pipeline/stages.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "graphex/common/error.h"
#include "graphex/common/log.h"
#include "graphex/common/parallel.h"
#include "graphex/corpus/corpus_io.h"
#include "graphex/features/embedding_table.h"
#include "graphex/graph/pair_graph.h"
#include "graphex/selector/tfidf.h"

namespace graphex::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kStageFile[] = "stage.json";

void WriteStageFile(const fs::path& dir, const std::string& stage, const std::string& hash,
                    const PipelineConfig& config) {
  const json j = {{"stage", stage}, {"config_hash", hash}, {"config", config.ToJson()}};
  std::ofstream out(dir / kStageFile, std::ios::trunc);
  if (!out) throw IoError("cannot write " + (dir / kStageFile).string());
  out << j.dump(2) << "\n";
}

std::string ReadStageHash(const fs::path& dir, const std::string& stage) {
  std::ifstream in(dir / kStageFile);
  if (!in) throw IoError(dir.string() + " has no " + stage + " output; run " + stage + " first");
  const json j = json::parse(in);
  return j.at("config_hash").get<std::string>();
}

std::optional<features::EmbeddingTable> LoadOptional(const fs::path& path) {
  if (path.empty()) return std::nullopt;
  return features::EmbeddingTable::LoadVectorFile(path);
}

}  // namespace

fs::path CorpusDir(const PipelineConfig& c) { return c.paths.workdir / "corpus"; }
fs::path TrainDir(const PipelineConfig& c) { return c.paths.workdir / "train"; }
fs::path SelectionsPath(const PipelineConfig& c) { return c.paths.workdir / "selections.tsv"; }
fs::path ReportJsonPath(const PipelineConfig& c) { return c.paths.workdir / "report.json"; }
fs::path ReportTextPath(const PipelineConfig& c) { return c.paths.workdir / "report.txt"; }

void WriteSelections(const fs::path& path, const std::string& config_hash,
                     const std::vector<SelectionRecord>& records) {
  std::string text = fmt::format("# config_hash {}\n# user\titem\tsentences\tobjective\tsolver\n",
                                 config_hash);
  for (const auto& r : records) {
    text += fmt::format("{}\t{}\t{}\t{:.17g}\t{}\n", r.user, r.item, fmt::join(r.sentences, ","),
                        r.objective, selector::SolverKindName(r.solver));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

std::vector<SelectionRecord> ReadSelections(const fs::path& path, std::string* config_hash) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open selections file " + path.string());
  std::vector<SelectionRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# config_hash ";
      if (config_hash && line.rfind(key, 0) == 0) *config_hash = line.substr(key.size());
      continue;
    }
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() != 5) {
      throw IoError(fmt::format("{}:{}: expected 5 tab-separated columns", path.string(), number));
    }
    SelectionRecord r;
    r.user = cols[0];
    r.item = cols[1];
    try {
      std::stringstream ids(cols[2]);
      std::string id;
      while (std::getline(ids, id, ',')) {
        if (!id.empty()) r.sentences.push_back(std::stoi(id));
      }
      r.objective = std::stod(cols[3]);
    } catch (const std::exception&) {
      throw IoError(fmt::format("{}:{}: malformed sentence ids or objective", path.string(), number));
    }
    if (cols[4] == "exact") {
      r.solver = selector::SolverKind::kExact;
    } else if (cols[4] == "greedy") {
      r.solver = selector::SolverKind::kGreedy;
    } else {
      throw IoError(fmt::format("{}:{}: unknown solver '{}'", path.string(), number, cols[4]));
    }
    out.push_back(std::move(r));
  }
  return out;
}

corpus::Corpus LoadStageCorpus(const PipelineConfig& config) {
  const fs::path dir = CorpusDir(config);
  if (ReadStageHash(dir, "preprocess") != config.Hashes().preprocess) {
    throw ConfigError("corpus in " + dir.string() +
                      " was built with a different config; rerun preprocess");
  }
  return corpus::LoadCorpus(dir);
}

features::NodeFeatures BuildFeatures(const PipelineConfig& config, const corpus::Corpus& corpus) {
  const auto words = LoadOptional(config.paths.attribute_vectors);
  std::optional<features::EmbeddingTable> sentences;
  if (!config.ablations.use_avg_word_embeddings) {
    sentences = LoadOptional(config.paths.sentence_vectors);
  }
  return features::NodeFeatures::Build(corpus, words ? &*words : nullptr,
                                       sentences ? &*sentences : nullptr,
                                       config.ablations.use_avg_word_embeddings,
                                       config.model.node_dim);
}

model::ModelConfig ModelConfigFor(const PipelineConfig& config,
                                  const features::NodeFeatures& features) {
  model::ModelConfig m = config.model;
  m.attribute_input_dim = features.attribute_dim();
  m.sentence_input_dim = features.sentence_dim();
  m.Validate();
  return m;
}

corpus::CorpusStats RunPreprocess(const PipelineConfig& config) {
  config.Validate();
  const auto lexicon = corpus::AttributeLexicon::Load(config.paths.lexicon, config.corpus.match_mode);
  corpus::PreprocessReport report;
  const corpus::Corpus c = corpus::Preprocess(config.paths.reviews, lexicon, config.corpus, &report);
  const fs::path dir = CorpusDir(config);
  fs::create_directories(dir);
  corpus::SaveCorpus(c, dir);
  WriteStageFile(dir, "preprocess", config.Hashes().preprocess, config);
  const auto stats = c.Stats();
  Logger()->info("corpus: {} users, {} items, {} reviews, {} sentences, {} attributes",
                 stats.users, stats.items, stats.reviews, stats.sentences, stats.attributes);
  return stats;
}

training::TrainResult RunTrain(const PipelineConfig& config, const fs::path& resume) {
  config.Validate();
  const corpus::Corpus c = LoadStageCorpus(config);
  const features::NodeFeatures feats = BuildFeatures(config, c);
  const training::Trainer trainer(c, feats, ModelConfigFor(config, feats), config.graph,
                                  config.training);
  const fs::path dir = TrainDir(config);
  fs::create_directories(dir);
  if (resume.empty()) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("epoch_", 0) == 0 || name == "best.json" || name == "metrics.log") {
        fs::remove(entry.path());
      }
    }
  }
  const std::string hash = config.Hashes().train;
  WriteStageFile(dir, "train", hash, config);
  return trainer.Run({dir, hash, resume});
}

std::vector<SelectionRecord> RunSelect(const PipelineConfig& config, const fs::path& checkpoint) {
  config.Validate();
  const auto hashes = config.Hashes();
  const corpus::Corpus c = LoadStageCorpus(config);
  const features::NodeFeatures feats = BuildFeatures(config, c);
  const model::ModelConfig mc = ModelConfigFor(config, feats);

  fs::path ckpt = checkpoint;
  if (ckpt.empty()) {
    std::ifstream in(TrainDir(config) / "best.json");
    if (!in) throw IoError("no best.json in " + TrainDir(config).string() + "; run train first");
    ckpt = TrainDir(config) / json::parse(in).at("checkpoint").get<std::string>();
  }
  const model::ModelParams params = training::LoadTrainedParams(
      ckpt, mc, static_cast<int>(c.users().size()), static_cast<int>(c.items().size()),
      hashes.train);
  const model::Model net(mc);
  const selector::IdfTable idf = selector::IdfTable::FromTrainingSplit(c);

  std::vector<std::pair<UserIndex, ItemIndex>> pairs;
  std::set<std::pair<UserIndex, ItemIndex>> seen;
  for (ReviewIndex r : c.split().test) {
    const auto& rev = c.review(r);
    if (seen.insert({rev.user, rev.item}).second) pairs.emplace_back(rev.user, rev.item);
  }

  std::vector<std::optional<SelectionRecord>> slots(pairs.size());
  ParallelFor(pairs.size(), config.workers, [&](size_t i) {
    const auto [user, item] = pairs[i];
    graph::PairGraph g;
    try {
      g = graph::BuildPairGraph(c, user, item, PoolMode::kEval, -1, config.graph);
    } catch (const graph::EmptyPoolError&) {
      Logger()->warn("pair ({}, {}) has an empty candidate pool; skipped", c.users()[user],
                     c.items()[item]);
      return;
    }
    const Eigen::VectorXd scores = net.Forward(g, feats.Gather(g), params).scores;
    std::vector<double> s(scores.data(), scores.data() + scores.size());
    std::vector<const TokenSeq*> tokens;
    for (SentenceIndex id : g.sentence_nodes()) tokens.push_back(&c.sentence(id).tokens);
    const auto sel = selector::SelectForPair(g.sentence_nodes(), s, tokens, idf, config.selection);
    slots[i] = SelectionRecord{c.users()[user], c.items()[item], sel.sentences, sel.objective,
                               sel.solver};
  });
  std::vector<SelectionRecord> records;
  for (auto& s : slots) {
    if (s) records.push_back(std::move(*s));
  }
  WriteSelections(SelectionsPath(config), hashes.select, records);
  Logger()->info("selected sentences for {} of {} test pairs", records.size(), pairs.size());
  return records;
}

Evaluation RunEvaluate(const PipelineConfig& config, const fs::path& selections) {
  config.Validate();
  const auto hashes = config.Hashes();
  const corpus::Corpus c = LoadStageCorpus(config);
  const fs::path path = selections.empty() ? SelectionsPath(config) : selections;
  std::string recorded;
  const auto records = ReadSelections(path, &recorded);
  if (recorded.empty()) {
    Logger()->warn("{} carries no config hash; staleness not checked", path.string());
  } else if (recorded != hashes.select) {
    throw ConfigError(path.string() + " was produced with a different config; rerun select");
  }

  std::map<std::pair<std::string, std::string>, const SelectionRecord*> by_pair;
  for (const auto& r : records) by_pair[{r.user, r.item}] = &r;

  Evaluation out;
  std::vector<metrics::EvalPair> pairs;
  for (ReviewIndex r : c.split().test) {
    const auto& rev = c.review(r);
    auto it = by_pair.find({c.users()[rev.user], c.items()[rev.item]});
    if (it == by_pair.end()) {
      ++out.missing_pairs;
      continue;
    }
    metrics::EvalPair p;
    for (SentenceIndex s : it->second->sentences) {
      if (s < 0 || static_cast<size_t>(s) >= c.sentences().size()) {
        throw IoError(fmt::format("{}: unknown sentence id {}", path.string(), s));
      }
      const auto& sent = c.sentence(s);
      p.candidate.insert(p.candidate.end(), sent.tokens.begin(), sent.tokens.end());
      p.predicted_attributes.insert(p.predicted_attributes.end(), sent.attributes.begin(),
                                    sent.attributes.end());
    }
    for (SentenceIndex s : rev.sentences) {
      const auto& sent = c.sentence(s);
      p.reference.insert(p.reference.end(), sent.tokens.begin(), sent.tokens.end());
      p.truth_attributes.insert(p.truth_attributes.end(), sent.attributes.begin(),
                                sent.attributes.end());
    }
    pairs.push_back(std::move(p));
  }
  if (out.missing_pairs > 0) {
    Logger()->warn("{} test pair(s) have no selection and are excluded", out.missing_pairs);
  }
  out.report = metrics::Evaluate(pairs);

  json j = metrics::ReportToJson(out.report);
  j["missing_pairs"] = out.missing_pairs;
  j["config_hash"] = hashes.select;
  fs::create_directories(config.paths.workdir);
  std::ofstream(ReportJsonPath(config), std::ios::trunc) << j.dump(2) << "\n";
  std::ofstream(ReportTextPath(config), std::ios::trunc)
      << metrics::ReportToTable(out.report)
      << fmt::format("test pairs without a selection: {}\n", out.missing_pairs);
  return out;
}

}  // namespace graphex::pipeline
