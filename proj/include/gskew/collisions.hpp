// Copyright 2026 The gskew Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Collision counting over rounded embeddings.

#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gskew/error.hpp"

namespace gskew {

inline constexpr int kMinRoundDigits = 6;
inline constexpr int kMaxRoundDigits = 12;
inline constexpr int kDefaultRoundDigits = 9;

// Entries printed with `digits` decimals, comma separated; "-0.000" is
// written as "0.000".
inline std::string rounded_key(std::span<const double> v, int digits) {
  if (digits < kMinRoundDigits || digits > kMaxRoundDigits) {
    throw DomainError("rounded_key: digits must lie in [6, 12]");
  }
  std::string key;
  key.reserve(v.size() * static_cast<std::size_t>(digits + 4));
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, v[i]);
    const char* s = buf;
    if (s[0] == '-') {
      bool zero = true;
      for (const char* p = s + 1; *p; ++p) zero = zero && (*p == '0' || *p == '.');
      if (zero) ++s;
    }
    if (i) key.push_back(',');
    key.append(s);
  }
  return key;
}

// Number of items whose key is shared with at least one other item.
inline std::size_t count_collisions(std::span<const std::string> keys) {
  std::map<std::string, std::size_t> groups;
  for (const auto& k : keys) ++groups[k];
  std::size_t c = 0;
  for (const auto& [k, n] : groups) c += n >= 2 ? n : 0;
  return c;
}

inline std::size_t count_collisions(std::span<const std::vector<double>> embeddings, int digits) {
  std::vector<std::string> keys;
  keys.reserve(embeddings.size());
  for (const auto& e : embeddings) keys.push_back(rounded_key(e, digits));
  return count_collisions(keys);
}

// Groups of item indices sharing a key, each of size >= 2, in first-seen order.
inline std::vector<std::vector<std::size_t>> collision_groups(std::span<const std::string> keys) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, idx] : groups) {
    if (idx.size() >= 2) out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gskew
