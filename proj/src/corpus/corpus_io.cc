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

#include "graphex/corpus/corpus_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphex/common/error.h"

namespace graphex::corpus {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream OpenOut(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

std::ifstream OpenIn(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  return in;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
std::string JoinInts(const std::vector<T>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

template <typename T>
std::vector<T> SplitInts(const std::string& s, char sep) {
  std::vector<T> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(static_cast<T>(std::stol(part)));
  }
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void WriteIdTable(const fs::path& p, const std::vector<std::string>& ids) {
  auto out = OpenOut(p);
  for (size_t i = 0; i < ids.size(); ++i) out << i << '\t' << ids[i] << '\n';
}

std::vector<std::string> ReadIdTable(const fs::path& p) {
  auto in = OpenIn(p);
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = SplitTabs(line);
    if (f.size() != 2 || std::stoul(f[0]) != ids.size()) {
      throw IoError("malformed id table " + p.string() + ": " + line);
    }
    ids.push_back(f[1]);
  }
  return ids;
}

}  // namespace

void SaveCorpus(const Corpus& corpus, const fs::path& dir) {
  fs::create_directories(dir);
  corpus.vocab().Save(dir / "vocab.tsv", dir / "token_counts.tsv");
  WriteIdTable(dir / "users.tsv", corpus.users());
  WriteIdTable(dir / "items.tsv", corpus.items());

  std::vector<std::string> surfaces;
  for (size_t a = 0; a < corpus.lexicon().size(); ++a) {
    surfaces.push_back(corpus.lexicon().Surface(static_cast<AttributeIndex>(a)));
  }
  WriteIdTable(dir / "attributes.tsv", surfaces);

  {
    auto out = OpenOut(dir / "reviews.tsv");
    for (const auto& r : corpus.reviews()) {
      out << r.id << '\t' << r.user << '\t' << r.item << '\t'
          << FormatDouble(r.rating) << '\t' << r.source_line << '\t'
          << JoinInts(r.sentences, ',') << '\n';
    }
  }
  {
    auto out = OpenOut(dir / "sentences.tsv");
    for (const auto& s : corpus.sentences()) {
      out << s.id << '\t' << s.review << '\t' << JoinInts(s.attributes, ',')
          << '\t' << JoinInts(s.tokens, ' ') << '\t' << s.text << '\n';
    }
  }
  {
    const auto& split = corpus.split();
    json j;
    j["seed"] = split.seed;
    j["ratios"] = {split.ratios.train, split.ratios.valid, split.ratios.test};
    j["match_mode"] =
        corpus.lexicon().mode() == MatchMode::kExact ? "exact" : "lowercase";
    j["train"] = split.train;
    j["valid"] = split.valid;
    j["test"] = split.test;
    OpenOut(dir / "split.json") << j.dump(1) << '\n';
  }
  {
    const CorpusStats st = corpus.Stats();
    json j = {{"users", st.users},
              {"items", st.items},
              {"reviews", st.reviews},
              {"sentences", st.sentences},
              {"attributes", st.attributes}};
    OpenOut(dir / "stats.json") << j.dump(1) << '\n';
  }
}

Corpus LoadCorpus(const fs::path& dir) {
  Vocabulary vocab = Vocabulary::Load(dir / "vocab.tsv", dir / "token_counts.tsv");
  std::vector<std::string> users = ReadIdTable(dir / "users.tsv");
  std::vector<std::string> items = ReadIdTable(dir / "items.tsv");

  json split_json;
  OpenIn(dir / "split.json") >> split_json;
  const MatchMode mode = split_json.at("match_mode").get<std::string>() == "exact"
                             ? MatchMode::kExact
                             : MatchMode::kLowercase;
  AttributeLexicon lexicon =
      AttributeLexicon::FromEntries(ReadIdTable(dir / "attributes.tsv"), mode);

  CorpusSplit split;
  split.seed = split_json.at("seed").get<uint64_t>();
  const auto ratios = split_json.at("ratios").get<std::vector<double>>();
  split.ratios = {ratios.at(0), ratios.at(1), ratios.at(2)};
  split.train = split_json.at("train").get<std::vector<ReviewIndex>>();
  split.valid = split_json.at("valid").get<std::vector<ReviewIndex>>();
  split.test = split_json.at("test").get<std::vector<ReviewIndex>>();

  std::vector<Review> reviews;
  {
    auto in = OpenIn(dir / "reviews.tsv");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto f = SplitTabs(line);
      if (f.size() != 6) throw IoError("malformed review row: " + line);
      Review r;
      r.id = std::stoi(f[0]);
      r.user = std::stoi(f[1]);
      r.item = std::stoi(f[2]);
      r.rating = std::stod(f[3]);
      r.source_line = std::stoi(f[4]);
      r.sentences = SplitInts<SentenceIndex>(f[5], ',');
      if (r.id != static_cast<ReviewIndex>(reviews.size())) {
        throw IoError("review ids are not dense at row: " + line);
      }
      reviews.push_back(std::move(r));
    }
  }
  std::vector<Sentence> sentences;
  {
    auto in = OpenIn(dir / "sentences.tsv");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto f = SplitTabs(line);
      if (f.size() != 5) throw IoError("malformed sentence row: " + line);
      Sentence s;
      s.id = std::stoi(f[0]);
      s.review = std::stoi(f[1]);
      s.attributes = SplitInts<AttributeIndex>(f[2], ',');
      s.tokens = SplitInts<TokenId>(f[3], ' ');
      s.text = f[4];
      if (s.id != static_cast<SentenceIndex>(sentences.size())) {
        throw IoError("sentence ids are not dense at row: " + line);
      }
      sentences.push_back(std::move(s));
    }
  }
  return Corpus::FromTables(std::move(users), std::move(items), std::move(lexicon),
                            std::move(vocab), std::move(reviews),
                            std::move(sentences), std::move(split));
}

}  // namespace graphex::corpus
