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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "graphex/common/error.h"
#include "graphex/pipeline/stages.h"
#include "graphex/training/adam.h"
#include "graphex/training/losses.h"
#include "graphex/training/relevance.h"
#include "graphex/training/trainer.h"
#include "planted.h"

namespace graphex::training {
namespace {

namespace fs = std::filesystem;

TEST(PairwiseRankLoss, Examples) {
  const std::vector<double> r{1.0, 0.0};
  const std::vector<IndexPair> p{{0, 1}};
  EXPECT_NEAR(PairwiseRankLoss(Eigen::Vector2d(0, 0), r, p).value, std::log(2.0), 1e-12);
  EXPECT_NEAR(PairwiseRankLoss(Eigen::Vector2d(2, 0), r, p).value, 0.126928, 1e-6);
  // Wrong order costs more.
  EXPECT_NEAR(PairwiseRankLoss(Eigen::Vector2d(0, 2), r, p).value, 2.126928, 1e-6);
  const auto tie = PairwiseRankLoss(Eigen::Vector2d(3, -1), {0.5, 0.5 + 1e-9}, p);
  EXPECT_EQ(tie.value, 0.0);
  EXPECT_TRUE(tie.grad.isZero(0.0));
  EXPECT_EQ(PairwiseRankLoss(Eigen::Vector2d(3, -1), r, {}).value, 0.0);
}

TEST(PairwiseRankLoss, ShiftAndSwapInvariance) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    Eigen::VectorXd g(m);
    std::vector<double> r(m);
    for (int i = 0; i < m; ++i) {
      g(i) = n(rng);
      r[i] = static_cast<double>(rng() % 3) / 2.0;
    }
    const auto pairs = EligiblePairs(r);
    const double base = PairwiseRankLoss(g, r, pairs).value;
    const Eigen::VectorXd shifted = g.array() + n(rng) * 10.0;
    EXPECT_NEAR(PairwiseRankLoss(shifted, r, pairs).value, base, 1e-10);
    std::vector<IndexPair> swapped;
    for (auto [i, j] : pairs) swapped.emplace_back(j, i);
    EXPECT_NEAR(PairwiseRankLoss(g, r, swapped).value, base, 1e-12);
  }
}

TEST(PairwiseRankLoss, GradientMatchesFiniteDifference) {
  const Eigen::Vector3d g(0.3, -0.2, 1.1);
  const std::vector<double> r{0.9, 0.1, 0.4};
  const auto pairs = EligiblePairs(r);
  const auto l = PairwiseRankLoss(g, r, pairs);
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d hi = g, lo = g;
    hi(i) += 1e-6;
    lo(i) -= 1e-6;
    const double fd =
        (PairwiseRankLoss(hi, r, pairs).value - PairwiseRankLoss(lo, r, pairs).value) / 2e-6;
    EXPECT_NEAR(l.grad(i), fd, 1e-8);
  }
}

TEST(SamplePairs, EligibleAndBudget) {
  const std::vector<double> r{1.0, 1.0, 0.0, 0.5};
  const auto all = EligiblePairs(r);
  EXPECT_EQ(all, (std::vector<IndexPair>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(SamplePairs(r, 10, false, 1), all);
  EXPECT_EQ(SamplePairs(r, 2, true, 1), all);
  const auto some = SamplePairs(r, 3, false, 1);
  ASSERT_EQ(some.size(), 3u);
  for (const auto& p : some) EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
  EXPECT_EQ(SamplePairs(r, 3, false, 1), some);
  EXPECT_TRUE(SamplePairs({0.2, 0.2}, 5, false, 1).empty());
}

TEST(AttributeLoss, Examples) {
  EXPECT_NEAR(AttributeLoss(Eigen::Vector2d(0.5, 0.5), {1, 0}, true).value, std::log(2.0), 1e-12);
  // Positives only: the negative contributes nothing.
  EXPECT_NEAR(AttributeLoss(Eigen::Vector2d(0.5, 0.9), {1, 0}, false).value, std::log(2.0) / 2,
              1e-12);
  EXPECT_NEAR(AttributeLoss(Eigen::Vector2d(0.8, 0.1), {1, 0}, true).value,
              -(std::log(0.8) + std::log(0.9)) / 2, 1e-12);
}

TEST(AttributeLoss, Errors) {
  EXPECT_THROW(AttributeLoss(Eigen::Vector2d(0.0, 0.5), {1, 0}, true), Error);
  EXPECT_THROW(AttributeLoss(Eigen::Vector2d(0.5, 1.0), {1, 0}, true), Error);
  EXPECT_THROW(AttributeLoss(Eigen::Vector2d(0.5, 1.5), {1, 0}, false), Error);
  // p = 1 on a negative is fine without the balanced term.
  EXPECT_NO_THROW(AttributeLoss(Eigen::Vector2d(0.5, 1.0), {1, 0}, false));
}

TEST(CombinedLoss, WeightsAndRange) {
  EXPECT_DOUBLE_EQ(CombinedLoss(2.0, 4.0, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(CombinedLoss(2.0, 4.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(CombinedLoss(2.0, 4.0, 0.0), 4.0);
  EXPECT_THROW(CombinedLoss(1, 1, -0.1), Error);
  EXPECT_THROW(CombinedLoss(1, 1, 1.1), Error);
}

model::ModelParams OneTensor(double v) {
  model::ModelParams p;
  p.score_head = Eigen::MatrixXd::Constant(2, 1, v);
  return p;
}

TEST(Adam, ZeroGradientLeavesParams) {
  auto p = OneTensor(1.0);
  auto state = AdamState::For(p);
  AdamStep(p, OneTensor(0.0), state, {});
  EXPECT_TRUE(p == OneTensor(1.0));
  EXPECT_EQ(state.step, 1);
}

TEST(Adam, FirstStepMovesByLearningRate) {
  auto p = OneTensor(1.0);
  auto state = AdamState::For(p);
  AdamConfig c;
  c.learning_rate = 0.1;
  model::ModelParams g = OneTensor(0.5);
  g.score_head(1, 0) = -3.0;
  AdamStep(p, g, state, c);
  EXPECT_NEAR(p.score_head(0, 0), 0.9, 1e-6);
  EXPECT_NEAR(p.score_head(1, 0), 1.1, 1e-6);
}

TEST(Adam, NonFiniteGradientLeavesStateUntouched) {
  auto p = OneTensor(1.0);
  auto state = AdamState::For(p);
  AdamStep(p, OneTensor(0.2), state, {});
  const auto p_before = p;
  const auto m_before = state.m;
  model::ModelParams g = OneTensor(0.2);
  g.score_head(1, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    AdamStep(p, g, state, {});
    FAIL() << "expected NonFiniteGradient";
  } catch (const NonFiniteGradient& e) {
    EXPECT_NE(std::string(e.what()).find("score_head"), std::string::npos) << e.what();
  }
  EXPECT_TRUE(p == p_before);
  EXPECT_TRUE(state.m == m_before);
  EXPECT_EQ(state.step, 1);
}

TEST(RelevanceTargets, MaxOverGroundTruth) {
  const TokenSeq a{1, 2, 3, 4};
  const TokenSeq b{1, 5, 3, 6};
  const TokenSeq c{1, 2, 3, 6};
  const auto r = RelevanceTargets({&a, &b, &c}, {a, b});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], 1.0);
  EXPECT_LT(r[2], 1.0);
  EXPECT_GT(r[2], 0.0);
  EXPECT_DOUBLE_EQ(RelevanceTargets({&c}, {a})[0], RelevanceTargets({&c}, {a, TokenSeq{9}})[0]);
  EXPECT_TRUE(RelevanceTargets({&a}, {}).empty());
}

TEST(TopK, DescendingWithIndexTies) {
  EXPECT_EQ(TopK(Eigen::Vector4d(0.1, 0.5, 0.5, 0.3), 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(TopK(Eigen::Vector2d(0.1, 0.5), 5), (std::vector<int>{1, 0}));
}

// A preprocessed planted corpus shared by the trainer tests.
class TrainerTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = new fs::path(fs::temp_directory_path() / ("graphex_trainer_test." + std::to_string(::getpid())));
    fs::remove_all(*root_);
    const planted::Options o;
    const auto files = planted::WriteInputs(*root_ / "inputs", o);
    config_ = new pipeline::PipelineConfig;
    config_->paths.reviews = files.reviews;
    config_->paths.lexicon = files.lexicon;
    config_->paths.attribute_vectors = files.word_vectors;
    config_->paths.sentence_vectors = *root_ / "inputs" / "sentences.vec";
    config_->paths.workdir = *root_ / "work";
    config_->corpus.min_activity = 5;
    config_->model.node_dim = 16;
    config_->model.attention_dim = 16;
    config_->training.epochs = 4;
    config_->Propagate();
    pipeline::RunPreprocess(*config_);
    corpus_ = new corpus::Corpus(pipeline::LoadStageCorpus(*config_));
    planted::WriteSentenceVectors(*corpus_, config_->paths.sentence_vectors, o);
    features_ = new features::NodeFeatures(pipeline::BuildFeatures(*config_, *corpus_));
  }

  static void TearDownTestSuite() {
    delete features_;
    delete corpus_;
    delete config_;
    fs::remove_all(*root_);
    delete root_;
  }

  static Trainer Make(TrainConfig t) {
    return Trainer(*corpus_, *features_, pipeline::ModelConfigFor(*config_, *features_),
                   config_->graph, t);
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static inline fs::path* root_ = nullptr;
  static inline pipeline::PipelineConfig* config_ = nullptr;
  static inline corpus::Corpus* corpus_ = nullptr;
  static inline features::NodeFeatures* features_ = nullptr;
};

TEST_F(TrainerTest, RelevanceTargetsOnTrainExamples) {
  const Trainer t = Make(config_->training);
  ASSERT_FALSE(t.train_examples().empty());
  ASSERT_FALSE(t.valid_examples().empty());
  for (const auto& ex : t.train_examples()) {
    ASSERT_EQ(ex.relevance.size(), static_cast<size_t>(ex.graph.num_sentences()));
    const auto& own = corpus_->review(ex.target).sentences;
    for (int k = 0; k < ex.graph.num_sentences(); ++k) {
      const SentenceIndex s = ex.graph.sentence_nodes()[k];
      if (std::find(own.begin(), own.end(), s) != own.end()) EXPECT_DOUBLE_EQ(ex.relevance[k], 1.0);
      EXPECT_GE(ex.relevance[k], 0.0);
      EXPECT_LE(ex.relevance[k], 1.0);
    }
  }
}

TEST_F(TrainerTest, RankingOnlyLeavesAttributeHeadAtInit) {
  TrainConfig c = config_->training;
  c.lambda = 1.0;
  c.epochs = 2;
  const Trainer t = Make(c);
  const auto r = t.Run({});
  const auto init = t.InitialParams();
  EXPECT_TRUE(r.final_params.attribute_head == init.attribute_head);
  EXPECT_FALSE(r.final_params.score_head == init.score_head);
}

TEST_F(TrainerTest, HistoryAndBestEpoch) {
  const Trainer t = Make(config_->training);
  const auto r = t.Run({});
  ASSERT_EQ(r.history.size(), 4u);
  double best = -1.0;
  int best_epoch = 0;
  for (const auto& h : r.history) {
    EXPECT_TRUE(std::isfinite(h.loss));
    EXPECT_NEAR(h.loss, 0.5 * h.loss_s + 0.5 * h.loss_f, 1e-9);
    if (h.validation.selection > best) {
      best = h.validation.selection;
      best_epoch = h.epoch;
    }
  }
  EXPECT_EQ(r.best_epoch, best_epoch);
  EXPECT_DOUBLE_EQ(r.best_score, best);
  EXPECT_DOUBLE_EQ(t.Validate(r.best_params).selection, best);
}

TEST_F(TrainerTest, ResumeIsBitExact) {
  const Trainer t = Make(config_->training);
  const fs::path full = *root_ / "resume_full";
  const fs::path part = *root_ / "resume_part";
  const auto a = t.Run({full, "h", {}});

  TrainConfig two = config_->training;
  two.epochs = 2;
  Make(two).Run({part, "h", {}});
  const auto b = t.Run({part, "h", part / "epoch_2.ckpt"});

  EXPECT_TRUE(a.final_params == b.final_params);
  EXPECT_TRUE(a.best_params == b.best_params);
  EXPECT_EQ(a.best_epoch, b.best_epoch);
  for (const char* f : {"epoch_3.ckpt", "epoch_4.ckpt", "metrics.log", "best.json"}) {
    EXPECT_EQ(Slurp(full / f), Slurp(part / f)) << f;
  }
  EXPECT_THROW(t.Run({part, "other", part / "epoch_2.ckpt"}), ConfigError);
}

TEST_F(TrainerTest, WorkerCountDoesNotChangeResults) {
  TrainConfig c = config_->training;
  c.epochs = 2;
  const auto one = Make(c).Run({});
  c.workers = 3;
  const auto three = Make(c).Run({});
  EXPECT_TRUE(one.final_params == three.final_params);
  ASSERT_EQ(one.history.size(), three.history.size());
  for (size_t e = 0; e < one.history.size(); ++e) {
    EXPECT_EQ(one.history[e].loss, three.history[e].loss);
  }
}

TEST_F(TrainerTest, LoadTrainedParamsChecksHash) {
  const Trainer t = Make(config_->training);
  const fs::path dir = *root_ / "load";
  TrainConfig c = config_->training;
  c.epochs = 1;
  const auto r = Make(c).Run({dir, "h1", {}});
  const auto mc = pipeline::ModelConfigFor(*config_, *features_);
  const int users = static_cast<int>(corpus_->users().size());
  const int items = static_cast<int>(corpus_->items().size());
  EXPECT_TRUE(LoadTrainedParams(dir / "epoch_1.ckpt", mc, users, items, "h1") == r.final_params);
  EXPECT_THROW(LoadTrainedParams(dir / "epoch_1.ckpt", mc, users, items, "h2"), ConfigError);
}

TEST(TrainConfig, Validation) {
  TrainConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.lambda = 1.5;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.batch_size = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.adam.learning_rate = 0.0;
  EXPECT_THROW(c.Validate(), ConfigError);
}

}  // namespace
}  // namespace graphex::training
