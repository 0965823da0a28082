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

#ifndef GRAPHEX_COMMON_LOG_H_
#define GRAPHEX_COMMON_LOG_H_

#include <memory>

#include <spdlog/spdlog.h>

namespace graphex {

// Shared logger ("graphex"), writing to stderr. Library code logs warnings
// through it; callers may lower the level to silence them in tests.
std::shared_ptr<spdlog::logger> Logger();

}  // namespace graphex

#endif  // GRAPHEX_COMMON_LOG_H_
