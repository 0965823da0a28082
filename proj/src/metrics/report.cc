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

#include "graphex/metrics/report.h"

#include <fmt/format.h>

#include "graphex/metrics/attribute.h"
#include "graphex/metrics/bleu.h"
#include "graphex/metrics/rouge.h"

namespace graphex::metrics {

EvalReport Evaluate(const std::vector<EvalPair>& pairs) {
  EvalReport out;
  out.pairs = pairs.size();
  if (pairs.empty()) return out;

  std::vector<BleuPair> bleu;
  bleu.reserve(pairs.size());
  AttributeAverager attrs;
  double r1 = 0, r2 = 0, rl = 0;
  for (const auto& p : pairs) {
    bleu.push_back({p.candidate, {p.reference}});
    r1 += RougeN(p.candidate, p.reference, 1).f1;
    r2 += RougeN(p.candidate, p.reference, 2).f1;
    rl += RougeL(p.candidate, p.reference).f1;
    attrs.Add(p.predicted_attributes, p.truth_attributes);
  }
  const auto n = static_cast<double>(pairs.size());
  out.bleu1 = CorpusBleu(bleu, 1);
  out.bleu2 = CorpusBleu(bleu, 2);
  out.bleu4 = CorpusBleu(bleu, 4);
  out.rouge1 = r1 / n;
  out.rouge2 = r2 / n;
  out.rouge_l = rl / n;
  const Prf a = attrs.Mean();
  out.attribute_precision = a.precision;
  out.attribute_recall = a.recall;
  out.attribute_f1 = a.f1;
  out.attribute_pairs = attrs.counted();
  out.attribute_pairs_excluded = attrs.excluded();
  return out;
}

nlohmann::json ReportToJson(const EvalReport& r) {
  return {
      {"pairs", r.pairs},
      {"bleu", {{"bleu1", r.bleu1}, {"bleu2", r.bleu2}, {"bleu4", r.bleu4}}},
      {"rouge", {{"rouge1_f1", r.rouge1}, {"rouge2_f1", r.rouge2}, {"rougeL_f1", r.rouge_l}}},
      {"attribute",
       {{"precision", r.attribute_precision},
        {"recall", r.attribute_recall},
        {"f1", r.attribute_f1},
        {"pairs", r.attribute_pairs},
        {"excluded_empty_truth", r.attribute_pairs_excluded}}},
  };
}

std::string ReportToTable(const EvalReport& r) {
  std::string out = fmt::format("pairs evaluated: {}\n", r.pairs);
  auto row = [&out](const char* name, double v) {
    out += fmt::format("{:<22}{:>8.2f}\n", name, 100.0 * v);
  };
  row("BLEU-1", r.bleu1);
  row("BLEU-2", r.bleu2);
  row("BLEU-4", r.bleu4);
  row("ROUGE-1 F1", r.rouge1);
  row("ROUGE-2 F1", r.rouge2);
  row("ROUGE-L F1", r.rouge_l);
  row("Attribute precision", r.attribute_precision);
  row("Attribute recall", r.attribute_recall);
  row("Attribute F1", r.attribute_f1);
  out += fmt::format("attribute pairs excluded (empty truth): {}\n", r.attribute_pairs_excluded);
  return out;
}

}  // namespace graphex::metrics
