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

#ifndef GRAPHEX_COMMON_HASH_H_
#define GRAPHEX_COMMON_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace graphex {

// 64-bit FNV-1a. Stable across platforms, used for config and file hashes.
uint64_t Fnv1a64(std::string_view data, uint64_t seed = 14695981039346656037ull);

// Hex rendering of a 64-bit hash (16 lowercase hex digits).
std::string HexDigest(uint64_t hash);

// Mixes (seed, a, b, c) into a 64-bit value for deriving per-epoch and
// per-graph RNG seeds without carrying generator state between runs.
uint64_t DeriveSeed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0);

}  // namespace graphex

#endif  // GRAPHEX_COMMON_HASH_H_
