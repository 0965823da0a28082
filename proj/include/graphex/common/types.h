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

#ifndef GRAPHEX_COMMON_TYPES_H_
#define GRAPHEX_COMMON_TYPES_H_

#include <cstdint>
#include <vector>

namespace graphex {

// Dense, interned indices. All of them index into the owning Corpus tables.
using UserIndex = int32_t;
using ItemIndex = int32_t;
using ReviewIndex = int32_t;
using SentenceIndex = int32_t;
using AttributeIndex = int32_t;
using TokenId = int32_t;

using TokenSeq = std::vector<TokenId>;

enum class PoolMode { kTrain, kEval };

}  // namespace graphex

#endif  // GRAPHEX_COMMON_TYPES_H_
