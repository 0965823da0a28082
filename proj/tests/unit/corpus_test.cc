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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "graphex/common/error.h"
#include "graphex/corpus/corpus.h"
#include "graphex/corpus/corpus_io.h"
#include "graphex/corpus/lexicon.h"
#include "graphex/corpus/reviews.h"
#include "graphex/corpus/split.h"
#include "graphex/corpus/text.h"
#include "graphex/corpus/vocabulary.h"

namespace graphex::corpus {
namespace {

using fixtures::ReviewInput;

TEST(SegmentAndTokenize, TwoTerminalMarks) {
  const auto out = SegmentAndTokenize("Great view. Nice staff!");
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], (Words{"great", "view", "."}));
  EXPECT_EQ(out[1], (Words{"nice", "staff", "!"}));
}

TEST(SegmentAndTokenize, EmptyText) { EXPECT_TRUE(SegmentAndTokenize("").empty()); }

TEST(SegmentAndTokenize, SplitsAfterAbbreviation) {
  const auto out = SegmentAndTokenize("Mr. Smith stayed.");
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], (Words{"mr", "."}));
  EXPECT_EQ(out[1], (Words{"smith", "stayed", "."}));
}

TEST(SegmentAndTokenize, MarkInsideTokenDoesNotSplit) {
  const auto out = SegmentAndTokenize("abv 5.5 here? yes");
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], (Words{"abv", "5", ".", "5", "here", "?"}));
  EXPECT_EQ(out[1], (Words{"yes"}));
}

TEST(TagAttributes, SingleMatch) {
  const auto lex = AttributeLexicon::FromEntries({"room", "staff"});
  EXPECT_EQ(TagAttributes({"the", "room", "was", "clean"}, lex), (std::vector<AttributeIndex>{0}));
}

TEST(TagAttributes, NoMatchDropsSentence) {
  const auto lex = AttributeLexicon::FromEntries({"taste", "hops"});
  EXPECT_TRUE(TagAttributes({"i", "drank", "two", "bottles"}, lex).empty());

  ReviewRecord r;
  r.text = "I drank two bottles. Lovely hops.";
  const auto tagged = SegmentAndTag({r}, lex);
  ASSERT_EQ(tagged.size(), 1u);
  ASSERT_EQ(tagged[0].sentences.size(), 1u);
  EXPECT_EQ(tagged[0].sentences[0].attributes, (std::vector<AttributeIndex>{1}));
}

TEST(TagAttributes, MultiMatch) {
  const auto lex = AttributeLexicon::FromEntries({"room", "staff"});
  EXPECT_EQ(TagAttributes({"room", "and", "staff"}, lex), (std::vector<AttributeIndex>{0, 1}));
}

TEST(TagAttributes, MultiwordEntryNeedsContiguousRun) {
  const auto lex = AttributeLexicon::FromEntries({"front desk", "desk"});
  EXPECT_EQ(TagAttributes({"the", "front", "desk"}, lex), (std::vector<AttributeIndex>{0, 1}));
  EXPECT_EQ(TagAttributes({"front", "the", "desk"}, lex), (std::vector<AttributeIndex>{1}));
}

TEST(AttributeLexicon, RejectsDuplicates) {
  EXPECT_THROW(AttributeLexicon::FromEntries({"Room", "room"}), ConfigError);
}

TEST(IngestReviews, RatingThresholdIsStrict) {
  std::istringstream in(
      R"({"user_id":"a","item_id":"x","rating":10,"text":"t."})" "\n"
      R"({"user_id":"a","item_id":"x","rating":11,"text":"t."})" "\n");
  const auto r = ParseReviews(in, 10.0);
  ASSERT_EQ(r.reviews.size(), 1u);
  EXPECT_EQ(r.reviews[0].rating, 11.0);
  EXPECT_EQ(r.dropped_by_rating, 1u);
}

TEST(IngestReviews, MalformedRecordIsIsolated) {
  std::istringstream in(
      R"({"user_id":"a","item_id":"x","rating":20,"text":"one."})" "\n"
      R"({"user_id":"b","item_id":"x","rating":20,"text":"two."})" "\n"
      R"({"user_id":"c","item_id":"x","text":"no rating"})" "\n"
      R"({"user_id":"d","item_id":"y","rating":20,"text":"three."})" "\n");
  const auto r = ParseReviews(in, 10.0);
  EXPECT_EQ(r.reviews.size(), 3u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 3);
}

TEST(IngestReviews, UnreadableFileIsFatal) {
  EXPECT_THROW(IngestReviews("/nonexistent/reviews.jsonl", 10.0), IoError);
}

ReviewSet Reviews(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ReviewSet set;
  for (const auto& [u, c] : pairs) {
    ReviewRecord r;
    r.user_id = u;
    r.item_id = c;
    set.push_back(r);
  }
  return set;
}

TEST(FilterMinActivity, AlreadyAtFixpoint) {
  const auto set = Reviews({{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  EXPECT_EQ(FilterMinActivity(set, 2).size(), 4u);
}

TEST(FilterMinActivity, RemovesInactiveUser) {
  auto set = Reviews({{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}, {"c", "x"}});
  const auto out = FilterMinActivity(set, 2);
  EXPECT_EQ(out.size(), 4u);
  for (const auto& r : out) EXPECT_NE(r.user_id, "c");
}

TEST(FilterMinActivity, ChainNeedsSecondPass) {
  // Dropping user c (1 review) leaves item z with one review, which then
  // drops, which in turn leaves user d below the threshold.
  const auto set = Reviews({{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"},
                            {"c", "z"}, {"d", "z"}, {"d", "x"}});
  const auto out = FilterMinActivity(set, 2);
  std::set<std::string> users;
  for (const auto& r : out) users.insert(r.user_id);
  EXPECT_EQ(users, (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(out.size(), 4u);
}

TEST(FilterMinActivity, RejectsNonPositiveCount) {
  EXPECT_THROW(FilterMinActivity({}, 0), ConfigError);
}

TEST(FilterMinActivity, OutputIsFixpoint) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::string, std::string>> pairs;
    const int n = 10 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) {
      pairs.emplace_back("u" + std::to_string(rng() % 12), "i" + std::to_string(rng() % 12));
    }
    const int min_count = 1 + static_cast<int>(rng() % 4);
    const auto once = FilterMinActivity(Reviews(pairs), min_count);
    std::map<std::string, int> users, items;
    for (const auto& r : once) {
      ++users[r.user_id];
      ++items[r.item_id];
    }
    for (const auto& [u, c] : users) EXPECT_GE(c, min_count);
    for (const auto& [i, c] : items) EXPECT_GE(c, min_count);
    EXPECT_EQ(FilterMinActivity(once, min_count).size(), once.size());
  }
}

TEST(Vocabulary, UnderCapacity) {
  const Words w{"a", "b", "c", "d", "e"};
  const auto v = Vocabulary::Build({&w}, 20000);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v.Token(Vocabulary::kUnkId), Vocabulary::kUnkToken);
}

TEST(Vocabulary, FrequencyThenLexicographicOrder) {
  const Words w{"pear", "fig", "apple", "fig", "kiwi", "apple"};
  const auto v = Vocabulary::Build({&w}, 3);
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v.Token(1), "apple");
  EXPECT_EQ(v.Token(2), "fig");
  EXPECT_EQ(v.Token(3), "kiwi");
  EXPECT_EQ(v.Lookup("pear"), Vocabulary::kUnkId);
  EXPECT_EQ(v.Count(1), 2);
}

TEST(SplitCorpus, DefaultRatios) {
  const auto s = SplitCorpus(100, {}, 7);
  EXPECT_EQ(s.train.size(), 70u);
  EXPECT_EQ(s.valid.size(), 15u);
  EXPECT_EQ(s.test.size(), 15u);
}

TEST(SplitCorpus, DeterministicAndDisjoint) {
  const auto a = SplitCorpus(57, {}, 3);
  EXPECT_EQ(a, SplitCorpus(57, {}, 3));
  std::vector<ReviewIndex> all = a.train;
  all.insert(all.end(), a.valid.begin(), a.valid.end());
  all.insert(all.end(), a.test.begin(), a.test.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 57; ++i) EXPECT_EQ(all[i], i);
}

TEST(SplitCorpus, RoundingFloorsValidAndTest) {
  const auto s = SplitCorpus(10, {}, 7);
  EXPECT_EQ(s.valid.size(), 1u);
  EXPECT_EQ(s.test.size(), 1u);
  EXPECT_EQ(s.train.size(), 8u);
}

TEST(SplitCorpus, RatiosMustSumToOne) {
  EXPECT_THROW(SplitCorpus(10, {0.7, 0.2, 0.2}, 7), ConfigError);
}

// Three users and three items with two reviews of every pair but one.
std::vector<ReviewInput> SmallReviews() {
  const std::vector<std::string> texts = {
      "The room was clean. Staff were kind.", "Great view from the room.",
      "The staff helped us. I slept well.", "Breakfast was cold. The room was small.",
      "Lovely view. Nice breakfast!", "Staff and room both fine."};
  std::vector<ReviewInput> out;
  int k = 0;
  for (int u = 0; u < 3; ++u) {
    for (int c = 0; c < 3; ++c) {
      for (int rep = 0; rep < 2; ++rep) {
        if (u == 2 && c == 2 && rep == 1) continue;
        out.push_back({"u" + std::to_string(u), "i" + std::to_string(c),
                       texts[k++ % texts.size()]});
      }
    }
  }
  return out;
}

CorpusOptions SmallOptions() {
  CorpusOptions o;
  o.min_activity = 2;
  return o;
}

const std::vector<std::string> kLexicon = {"room", "staff", "view", "breakfast"};

TEST(Corpus, EverySentenceHasAttributes) {
  const auto c = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  ASSERT_FALSE(c.sentences().empty());
  for (const auto& s : c.sentences()) EXPECT_FALSE(s.attributes.empty()) << s.text;
  for (const auto& r : c.reviews()) EXPECT_FALSE(r.sentences.empty());
}

TEST(Corpus, VocabularyRebuildsFromTrainingSplit) {
  const auto c = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  std::vector<Words> words;
  for (ReviewIndex r : c.split().train) {
    for (SentenceIndex s : c.review(r).sentences) words.push_back(Tokenize(c.sentence(s).text));
  }
  std::vector<const Words*> ptrs;
  for (const auto& w : words) ptrs.push_back(&w);
  EXPECT_TRUE(Vocabulary::Build(ptrs, SmallOptions().vocab_size) == c.vocab());
}

TEST(Corpus, EvalPoolExcludesHeldOutSentences) {
  const auto c = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  std::vector<ReviewIndex> held = c.split().valid;
  held.insert(held.end(), c.split().test.begin(), c.split().test.end());
  ASSERT_FALSE(held.empty());
  for (ReviewIndex r : held) {
    const auto& rev = c.review(r);
    const auto pool = c.CandidatePool(rev.user, rev.item, PoolMode::kEval);
    for (SentenceIndex s : rev.sentences) {
      EXPECT_FALSE(std::binary_search(pool.begin(), pool.end(), s));
    }
  }
}

TEST(Corpus, TrainPoolContainsTarget) {
  const auto c = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  for (ReviewIndex r : c.split().train) {
    const auto& rev = c.review(r);
    const auto pool = c.CandidatePool(rev.user, rev.item, PoolMode::kTrain, r);
    EXPECT_TRUE(std::is_sorted(pool.begin(), pool.end()));
    for (SentenceIndex s : rev.sentences) {
      EXPECT_TRUE(std::binary_search(pool.begin(), pool.end(), s));
    }
  }
}

TEST(Corpus, DegeneratePoolIsTheTargetReview) {
  CorpusOptions o;
  o.min_activity = 1;
  o.ratios = {1.0, 0.0, 0.0};
  const auto c = fixtures::MakeCorpus({{"u", "x", "Nice room."}, {"v", "y", "Good staff."}},
                                      kLexicon, o);
  const auto& rev = c.review(0);
  EXPECT_EQ(c.CandidatePool(rev.user, rev.item, PoolMode::kTrain, 0), rev.sentences);
}

TEST(Corpus, BuildIsDeterministic) {
  const auto a = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  const auto b = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  EXPECT_EQ(a.split(), b.split());
  ASSERT_EQ(a.sentences().size(), b.sentences().size());
  for (size_t i = 0; i < a.sentences().size(); ++i) {
    EXPECT_EQ(a.sentences()[i].tokens, b.sentences()[i].tokens);
  }
}

std::string ReadAll(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(CorpusIo, RoundTripIsByteIdentical) {
  const auto c = fixtures::MakeCorpus(SmallReviews(), kLexicon, SmallOptions());
  const auto root = std::filesystem::temp_directory_path() / ("graphex_corpus_io_test." + std::to_string(::getpid()));
  std::filesystem::remove_all(root);
  SaveCorpus(c, root / "a");
  const auto loaded = LoadCorpus(root / "a");
  SaveCorpus(loaded, root / "b");
  for (const auto& entry : std::filesystem::directory_iterator(root / "a")) {
    EXPECT_EQ(ReadAll(entry.path()), ReadAll(root / "b" / entry.path().filename()))
        << entry.path().filename();
  }
  EXPECT_EQ(loaded.split(), c.split());
  EXPECT_TRUE(loaded.vocab() == c.vocab());
  EXPECT_EQ(loaded.UserTrainAttributes(0), c.UserTrainAttributes(0));
  std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace graphex::corpus
