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

#ifndef GRAPHEX_COMMON_ERROR_H_
#define GRAPHEX_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace graphex {

// Base class for all errors raised by the library. Errors that abort a run
// (bad config, unreadable files, shape mismatches) are thrown; per-record
// problems are collected and reported instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphex

#endif  // GRAPHEX_COMMON_ERROR_H_
