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

#ifndef GRAPHEX_METRICS_REPORT_H_
#define GRAPHEX_METRICS_REPORT_H_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphex/common/types.h"

namespace graphex::metrics {

// One evaluated (user, item) pair. The selected sentences are concatenated
// into a single candidate and the ground-truth review into a single reference.
struct EvalPair {
  TokenSeq candidate;
  TokenSeq reference;
  std::vector<AttributeIndex> predicted_attributes;
  std::vector<AttributeIndex> truth_attributes;
};

struct EvalReport {
  size_t pairs = 0;
  double bleu1 = 0.0, bleu2 = 0.0, bleu4 = 0.0;
  double rouge1 = 0.0, rouge2 = 0.0, rouge_l = 0.0;
  double attribute_precision = 0.0, attribute_recall = 0.0, attribute_f1 = 0.0;
  size_t attribute_pairs = 0;
  size_t attribute_pairs_excluded = 0;
};

// Corpus BLEU (unsmoothed) and per-pair-averaged ROUGE F1 and attribute P/R/F1.
// All values are 0 for an empty input.
EvalReport Evaluate(const std::vector<EvalPair>& pairs);

nlohmann::json ReportToJson(const EvalReport& report);
// Fixed-width table; values are percentages with two decimals.
std::string ReportToTable(const EvalReport& report);

}  // namespace graphex::metrics

#endif  // GRAPHEX_METRICS_REPORT_H_
