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

#ifndef GRAPHEX_CORPUS_TEXT_H_
#define GRAPHEX_CORPUS_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace graphex::corpus {

using Words = std::vector<std::string>;

// Splits `text` into sentences and tokens.
//
// A sentence ends at '.', '!' or '?' when the mark is followed by whitespace
// or the end of the text. No abbreviation handling: "Mr. Smith" splits after
// "Mr.". Tokens are lowercased (ASCII) and every ASCII punctuation character
// becomes a token of its own. Empty sentences are skipped.
std::vector<Words> SegmentAndTokenize(std::string_view text);

// Tokenizes a single sentence with the same rules (no segmentation).
Words Tokenize(std::string_view sentence);

std::string JoinWords(const Words& words);

}  // namespace graphex::corpus

#endif  // GRAPHEX_CORPUS_TEXT_H_
