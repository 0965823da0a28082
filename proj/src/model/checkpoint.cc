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

#include "graphex/model/checkpoint.h"

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>

#include "graphex/common/error.h"

namespace graphex::model {

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'G', 'X', 'C', 'K', 'P', 'T', '0', '1'};

void PutU64(std::ostream& out, uint64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); }

void PutString(std::ostream& out, const std::string& s) {
  PutU64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint64_t GetU64(std::istream& in) {
  uint64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), 8);
  if (!in) throw IoError("truncated checkpoint");
  return v;
}

std::string GetString(std::istream& in) {
  const uint64_t n = GetU64(in);
  if (n > (1ull << 32)) throw IoError("corrupt checkpoint string length");
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  if (!in) throw IoError("truncated checkpoint");
  return s;
}

}  // namespace

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + path.string());
    out.write(kMagic, sizeof(kMagic));
    PutString(out, ckpt.config_hash);
    PutString(out, ckpt.metadata);
    PutU64(out, ckpt.tensors.size());
    for (const auto& t : ckpt.tensors) {
      PutString(out, t.name);
      PutU64(out, static_cast<uint64_t>(t.value.rows()));
      PutU64(out, static_cast<uint64_t>(t.value.cols()));
      for (Eigen::Index r = 0; r < t.value.rows(); ++r) {
        for (Eigen::Index c = 0; c < t.value.cols(); ++c) {
          const double v = t.value(r, c);
          out.write(reinterpret_cast<const char*>(&v), 8);
        }
      }
    }
    if (!out) throw IoError("failed writing checkpoint " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint ReadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read checkpoint " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kMagic)) {
    throw IoError("not a checkpoint file: " + path.string());
  }
  Checkpoint ckpt;
  ckpt.config_hash = GetString(in);
  ckpt.metadata = GetString(in);
  const uint64_t count = GetU64(in);
  for (uint64_t i = 0; i < count; ++i) {
    NamedTensor t;
    t.name = GetString(in);
    const auto rows = static_cast<Eigen::Index>(GetU64(in));
    const auto cols = static_cast<Eigen::Index>(GetU64(in));
    t.value.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        double v;
        in.read(reinterpret_cast<char*>(&v), 8);
        t.value(r, c) = v;
      }
    }
    if (!in) throw IoError("truncated checkpoint tensor '" + t.name + "'");
    ckpt.tensors.push_back(std::move(t));
  }
  return ckpt;
}

void ExportParams(const ModelParams& params, const std::string& prefix,
                  std::vector<NamedTensor>& out) {
  params.ForEach([&](const std::string& name, const Eigen::MatrixXd& t) {
    out.push_back({prefix + name, t});
  });
}

void ImportParams(const std::vector<NamedTensor>& tensors, const std::string& prefix,
                  ModelParams& params) {
  std::map<std::string, const Eigen::MatrixXd*> by_name;
  for (const auto& t : tensors) by_name.emplace(t.name, &t.value);
  params.ForEach([&](const std::string& name, Eigen::MatrixXd& t) {
    auto it = by_name.find(prefix + name);
    if (it == by_name.end()) throw ShapeError("checkpoint lacks tensor '" + prefix + name + "'");
    if (it->second->rows() != t.rows() || it->second->cols() != t.cols()) {
      throw ShapeError("checkpoint tensor '" + prefix + name + "' has the wrong shape");
    }
    t = *it->second;
  });
}

}  // namespace graphex::model
